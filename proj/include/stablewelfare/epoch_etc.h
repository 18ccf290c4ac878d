#pragma once

#include <cstdint>
#include <vector>

#include "stablewelfare/environment.h"
#include "stablewelfare/matching.h"
#include "stablewelfare/oracle.h"

namespace stablewelfare {

enum class Phase { kExplore, kExploit };

const char* ToString(Phase phase);

struct StepRecord {
  std::int64_t t = 0;  // 1-based
  std::int64_t epoch = 0;
  Phase phase = Phase::kExplore;
  std::vector<int> assignment;    // agent -> arm pulled
  std::vector<bool> conflicted;   // per agent
};

struct EpochRecord {
  std::int64_t epoch = 0;
  std::int64_t commit_step = 0;   // first exploitation step
  std::int64_t samples_per_pair = 0;
  Matching committed;
  std::uint64_t estimator_fingerprint = 0;
};

struct SimulationTrace {
  int n = 0;
  std::uint64_t truth_fingerprint = 0;
  std::int64_t horizon = 0;
  Objective objective = Objective::kUtilitarian;
  std::vector<StepRecord> steps;
  // Epochs that reached their matching phase before the horizon.
  std::vector<EpochRecord> epochs;

  // Matching committed in the last epoch that got to commit, if any.
  const Matching* FinalCommitted() const {
    return epochs.empty() ? nullptr : &epochs.back().committed;
  }
};

// Commitment rule applied to the estimated profile.
Matching SelectMatching(const UtilityProfile& estimate, Objective objective);

// Epoch explore-then-commit. Epoch l = 1, 2, ... explores round-robin for
// n * ceil(log2(l + 1)) rounds, re-estimates the means from every exploration
// sample gathered so far, and commits to the utilitarian- or maximin-optimal
// stable matching of the estimate for 2^l rounds. Stops after exactly
// `horizon` steps. Throws Error(kHorizonTooSmall) if horizon < n.
SimulationTrace RunEpochEtc(const Environment& env, Objective objective,
                            std::int64_t horizon, std::uint64_t seed);

}  // namespace stablewelfare
