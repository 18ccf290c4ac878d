#pragma once

#include "stablewelfare/closure.h"
#include "stablewelfare/matching.h"
#include "stablewelfare/profile.h"
#include "stablewelfare/rotations.h"

namespace stablewelfare {

struct UtilitarianSolution {
  RotationDigraph digraph;
  ClosedSubset eliminated;  // rotations removed from the agent-optimal matching
  Matching matching;
};

// Stable matching of maximum total utility on both sides: rotations between
// the agent- and arm-optimal matchings, sparse precedence graph, and a
// minimum-weight closed subset found by min cut.
UtilitarianSolution SolveUtilitarian(const UtilityProfile& profile);

Matching UtilitarianOptimal(const UtilityProfile& profile);

}  // namespace stablewelfare
