#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stablewelfare/profile.h"
#include "stablewelfare/random.h"

namespace stablewelfare {

// Hidden market: each pull of arm j by agent i alone yields agent reward
// mu_a[i][j] + noise and arm reward mu_b[j][i] + noise, with independent
// Gaussian noise of standard deviation `noise_sd` (1 is a 1-subgaussian
// instance, 0 makes rewards deterministic).
struct Environment {
  UtilityProfile truth;
  double noise_sd = 1.0;
};

struct StepOutcome {
  std::vector<double> agent_rewards;  // 0 for conflicted agents
  std::vector<double> arm_rewards;    // 0 for idle or conflicted arms
  std::vector<bool> agent_conflicted;
  // Sole puller of each arm; -1 if nobody or several agents pulled it.
  std::vector<int> arm_puller;
};

// Agents whose arm was pulled by someone else too. Throws on bad arm ids.
std::vector<bool> ConflictMask(std::span<const int> agent_to_arm, int n);

// Plays one round. `agent_to_arm` need not be injective: every participant
// on an arm pulled by two or more agents gets 0. Noise is drawn for the
// successful pairs in agent order (agent reward, then arm reward).
StepOutcome Step(const Environment& env, std::span<const int> agent_to_arm,
                 SplitMix64& rng);

// Running sums and counts per (agent, arm) for both reward directions.
class Estimator {
 public:
  explicit Estimator(int n);

  int n() const { return n_; }

  // Adds every non-conflicted sample of a round.
  void Record(std::span<const int> agent_to_arm, const StepOutcome& outcome);

  std::int64_t count(int agent, int arm) const {
    return counts_[static_cast<size_t>(agent * n_ + arm)];
  }
  // Sample means; undefined (NaN) while count(agent, arm) == 0.
  double agent_mean(int agent, int arm) const;
  double arm_mean(int arm, int agent) const;

  bool CountsUniform() const;

  // Mean utilities as a profile, ties broken toward the lower index. Throws
  // Error(kPreconditionViolated) if some pair has no samples.
  UtilityProfile EstimatedProfile() const;

  // FNV-1a over counts and sums, for trace bookkeeping.
  std::uint64_t Fingerprint() const;

 private:
  int n_;
  std::vector<std::int64_t> counts_;      // [agent * n + arm]
  std::vector<double> agent_sums_;        // [agent * n + arm]
  std::vector<double> arm_sums_;          // [arm * n + agent]
};

// Makes every row strict while keeping the order of distinct values: among
// equal entries the lower index stays on top and each later one is nudged
// one ulp below its predecessor.
UtilityProfile BreakTies(Matrix agent_utilities, Matrix arm_utilities);

// FNV-1a fingerprint of a profile's dimension and bit patterns.
std::uint64_t ProfileFingerprint(const UtilityProfile& profile);

}  // namespace stablewelfare
