#include "stablewelfare/environment.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "stablewelfare/error.h"

namespace stablewelfare {
namespace {

class Fnv1a {
 public:
  void Add(std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      hash_ ^= (word >> (8 * b)) & 0xffu;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void Add(double x) { Add(std::bit_cast<std::uint64_t>(x)); }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

void BreakRowTies(std::vector<double>& row) {
  std::vector<size_t> order(row.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return row[a] > row[b]; });
  for (size_t k = 1; k < order.size(); ++k) {
    const double above = row[order[k - 1]];
    if (row[order[k]] >= above) {
      row[order[k]] = std::nextafter(above, -std::numeric_limits<double>::infinity());
    }
  }
}

}  // namespace

std::vector<bool> ConflictMask(std::span<const int> agent_to_arm, int n) {
  std::vector<int> pulls(static_cast<size_t>(n), 0);
  for (int arm : agent_to_arm) {
    if (arm < 0 || arm >= n) {
      throw Error(ErrorCode::kInvalidArgument, "assignment names an unknown arm");
    }
    ++pulls[arm];
  }
  std::vector<bool> conflicted(agent_to_arm.size());
  for (size_t i = 0; i < agent_to_arm.size(); ++i) {
    conflicted[i] = pulls[agent_to_arm[i]] > 1;
  }
  return conflicted;
}

StepOutcome Step(const Environment& env, std::span<const int> agent_to_arm,
                 SplitMix64& rng) {
  const int n = env.truth.n();
  if (static_cast<int>(agent_to_arm.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch, "one arm per agent required");
  }
  StepOutcome out;
  out.agent_conflicted = ConflictMask(agent_to_arm, n);
  out.agent_rewards.assign(static_cast<size_t>(n), 0.0);
  out.arm_rewards.assign(static_cast<size_t>(n), 0.0);
  out.arm_puller.assign(static_cast<size_t>(n), -1);
  for (int agent = 0; agent < n; ++agent) {
    if (out.agent_conflicted[agent]) continue;
    const int arm = agent_to_arm[agent];
    out.arm_puller[arm] = agent;
    double agent_noise = 0.0, arm_noise = 0.0;
    if (env.noise_sd > 0.0) {
      agent_noise = env.noise_sd * rng.Gaussian();
      arm_noise = env.noise_sd * rng.Gaussian();
    }
    out.agent_rewards[agent] = env.truth.agent_utility(agent, arm) + agent_noise;
    out.arm_rewards[arm] = env.truth.arm_utility(arm, agent) + arm_noise;
  }
  return out;
}

Estimator::Estimator(int n)
    : n_(n),
      counts_(static_cast<size_t>(n * n), 0),
      agent_sums_(static_cast<size_t>(n * n), 0.0),
      arm_sums_(static_cast<size_t>(n * n), 0.0) {}

void Estimator::Record(std::span<const int> agent_to_arm,
                       const StepOutcome& outcome) {
  for (int agent = 0; agent < n_; ++agent) {
    if (outcome.agent_conflicted[agent]) continue;
    const int arm = agent_to_arm[agent];
    ++counts_[agent * n_ + arm];
    agent_sums_[agent * n_ + arm] += outcome.agent_rewards[agent];
    arm_sums_[arm * n_ + agent] += outcome.arm_rewards[arm];
  }
}

double Estimator::agent_mean(int agent, int arm) const {
  const auto c = count(agent, arm);
  return c == 0 ? std::numeric_limits<double>::quiet_NaN()
                : agent_sums_[agent * n_ + arm] / static_cast<double>(c);
}

double Estimator::arm_mean(int arm, int agent) const {
  const auto c = count(agent, arm);
  return c == 0 ? std::numeric_limits<double>::quiet_NaN()
                : arm_sums_[arm * n_ + agent] / static_cast<double>(c);
}

bool Estimator::CountsUniform() const {
  return std::adjacent_find(counts_.begin(), counts_.end(),
                            std::not_equal_to<>()) == counts_.end();
}

UtilityProfile Estimator::EstimatedProfile() const {
  if (std::find(counts_.begin(), counts_.end(), 0) != counts_.end()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "every pair needs a sample before estimating");
  }
  Matrix agents(static_cast<size_t>(n_), std::vector<double>(static_cast<size_t>(n_)));
  Matrix arms = agents;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      agents[i][j] = agent_mean(i, j);
      arms[j][i] = arm_mean(j, i);
    }
  }
  return BreakTies(std::move(agents), std::move(arms));
}

std::uint64_t Estimator::Fingerprint() const {
  Fnv1a h;
  h.Add(static_cast<std::uint64_t>(n_));
  for (auto c : counts_) h.Add(static_cast<std::uint64_t>(c));
  for (double s : agent_sums_) h.Add(s);
  for (double s : arm_sums_) h.Add(s);
  return h.value();
}

UtilityProfile BreakTies(Matrix agent_utilities, Matrix arm_utilities) {
  for (auto& row : agent_utilities) BreakRowTies(row);
  for (auto& row : arm_utilities) BreakRowTies(row);
  return UtilityProfile::FromMatrices(agent_utilities, arm_utilities);
}

std::uint64_t ProfileFingerprint(const UtilityProfile& profile) {
  Fnv1a h;
  h.Add(static_cast<std::uint64_t>(profile.n()));
  for (int i = 0; i < profile.n(); ++i) {
    for (int j = 0; j < profile.n(); ++j) {
      h.Add(profile.agent_utility(i, j));
      h.Add(profile.arm_utility(j, i));
    }
  }
  return h.value();
}

}  // namespace stablewelfare
