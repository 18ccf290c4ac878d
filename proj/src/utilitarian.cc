#include "stablewelfare/utilitarian.h"

namespace stablewelfare {

UtilitarianSolution SolveUtilitarian(const UtilityProfile& profile) {
  UtilitarianSolution out;
  out.digraph = BuildRotationDigraph(profile);
  out.eliminated = MinWeightClosedSubset(out.digraph.node_count(),
                                         out.digraph.weights, out.digraph.edges);
  out.matching = ApplyClosedSubset(out.digraph, out.eliminated.nodes);
  return out;
}

Matching UtilitarianOptimal(const UtilityProfile& profile) {
  return SolveUtilitarian(profile).matching;
}

}  // namespace stablewelfare
