#pragma once

#include <cstdint>

#include "stablewelfare/matching.h"

namespace stablewelfare {

// Epoch l >= 1 explores round-robin for n * ceil(log2(l + 1)) rounds, then
// commits for 2^l rounds.
struct EpochPlan {
  std::int64_t epoch = 1;
  std::int64_t explore_rounds = 0;
  std::int64_t exploit_rounds = 0;
};

EpochPlan PlanEpoch(int n, std::int64_t epoch);

// ceil(log2(x)) for x >= 1.
std::int64_t CeilLog2(std::int64_t x);

// Samples per (agent, arm) pair after the exploration phases of epochs
// 1..l, via the closed form (l+1)ceil(log2(l+1)) - 2^(floor(log2 l)+1) + 1.
std::int64_t CumulativeExplorationRounds(std::int64_t l);

// At time t agent i (0-based) pulls arm (t + i + 1) mod n, i.e. agent a_i
// pulls b_{(t+i) mod n + 1} in 1-based labels. A permutation for every t.
Matching RoundRobinAssignment(std::int64_t t, int n);

}  // namespace stablewelfare
