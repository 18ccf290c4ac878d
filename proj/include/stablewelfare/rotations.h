#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "stablewelfare/matching.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

struct RotationPair {
  int agent = 0;
  int arm = 0;

  friend bool operator==(const RotationPair&, const RotationPair&) = default;
  friend auto operator<=>(const RotationPair&, const RotationPair&) = default;
};

// A cyclic sequence (a0,b0),...,(a_{r-1},b_{r-1}) with r >= 2 in which every
// agent a_i is matched to b_i. Eliminating it moves a_i to b_{i+1 mod r}.
// Stored rotated so the smallest agent index comes first; equality compares
// this canonical form.
class Rotation {
 public:
  // Throws Error(kInvalidArgument) on r < 2 or repeated agents/arms.
  static Rotation FromCycle(std::vector<RotationPair> cycle);

  const std::vector<RotationPair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }

  std::string ToString() const;  // "(a0,b1) (a2,b0)"

  friend bool operator==(const Rotation&, const Rotation&) = default;
  friend auto operator<=>(const Rotation&, const Rotation&) = default;

 private:
  std::vector<RotationPair> pairs_;
};

// Throws Error(kRotationNotExposed) unless every pair is in `matching`.
Matching EliminateRotation(const Matching& matching, const Rotation& rotation);

// Utilitarian welfare lost by eliminating the rotation:
// R(EliminateRotation(m, rho)) == R(m) - RotationWeight(rho).
double RotationWeight(const UtilityProfile& profile, const Rotation& rotation);

struct BreakResult {
  Rotation rotation;
  Matching matching;  // input matching with `rotation` eliminated
};

// Frees `agent` and follows the resulting proposal sequence: each displaced
// agent proposes down its list to the first arm that prefers it to that arm's
// partner in `matching`. The sequence closes into a cycle, which is a rotation
// exposed in `matching`; it contains `agent` whenever that agent's rotation is
// already exposed.
//
// Throws Error(kUnstableInput) if `matching` is not stable and
// Error(kPreconditionViolated) if `agent` already holds its arm-optimal partner.
BreakResult BreakMatching(const UtilityProfile& profile,
                          const Matching& matching, int agent);
BreakResult BreakMatching(const UtilityProfile& profile,
                          const Matching& matching, int agent,
                          const Matching& arm_optimal);

// Rotations of a market plus the sparse predecessor edges. Node ids are the
// positions in `rotations`.
struct RotationDigraph {
  Matching agent_optimal;
  Matching arm_optimal;
  std::vector<Rotation> rotations;
  std::vector<double> weights;
  // (predecessor, successor) pairs, sorted, no duplicates.
  std::vector<std::pair<int, int>> edges;
  // Order in which the rotations were eliminated while walking from the
  // agent-optimal to the arm-optimal matching.
  std::vector<int> elimination_order;
  // walk[k] is the matching at which elimination_order[k] was eliminated;
  // walk.back() is the arm-optimal matching.
  std::vector<Matching> walk;

  int node_count() const { return static_cast<int>(rotations.size()); }
};

// Walks from the agent-optimal matching to the arm-optimal one, always
// breaking the lowest-index agent not yet at its arm-optimal partner. Fills
// everything except `edges`.
RotationDigraph EnumerateRotations(const UtilityProfile& profile);

// Adds the sparse predecessor edges to an enumerated rotation set.
//  (i)  (a, b) in rho1 and the next rotation pair below b on a's list lies in
//       rho2: rho1 -> rho2.
//  (ii) (a, b) belongs to no rotation but rho2 moves b to a partner it prefers
//       to a, and the nearest rotation pair above b on a's list lies in rho1:
//       rho2 -> rho1 (rho2 must go first, otherwise (a, b) would block).
void AddSparsePredecessorEdges(const UtilityProfile& profile,
                               RotationDigraph& digraph);

// EnumerateRotations followed by AddSparsePredecessorEdges.
RotationDigraph BuildRotationDigraph(const UtilityProfile& profile);

// Eliminates `nodes` from the agent-optimal matching following
// elimination_order. `nodes` must be predecessor-closed.
Matching ApplyClosedSubset(const RotationDigraph& digraph,
                           const std::vector<int>& nodes);

bool IsPredecessorClosed(const RotationDigraph& digraph,
                         const std::vector<int>& nodes);

}  // namespace stablewelfare
