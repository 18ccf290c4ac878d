#include "stablewelfare/epoch_etc.h"

#include <algorithm>
#include <string>

#include "stablewelfare/error.h"
#include "stablewelfare/maximin.h"
#include "stablewelfare/schedule.h"
#include "stablewelfare/utilitarian.h"

namespace stablewelfare {

const char* ToString(Phase phase) {
  return phase == Phase::kExplore ? "explore" : "exploit";
}

Matching SelectMatching(const UtilityProfile& estimate, Objective objective) {
  return objective == Objective::kUtilitarian ? UtilitarianOptimal(estimate)
                                              : MaximinOptimal(estimate);
}

SimulationTrace RunEpochEtc(const Environment& env, Objective objective,
                            std::int64_t horizon, std::uint64_t seed) {
  const int n = env.truth.n();
  if (horizon < n) {
    throw Error(ErrorCode::kHorizonTooSmall,
                "horizon " + std::to_string(horizon) + " is shorter than n = " +
                    std::to_string(n));
  }
  SimulationTrace trace;
  trace.n = n;
  trace.truth_fingerprint = ProfileFingerprint(env.truth);
  trace.horizon = horizon;
  trace.objective = objective;
  trace.steps.reserve(static_cast<size_t>(horizon));

  SplitMix64 rng(seed);
  Estimator estimator(n);
  std::int64_t t = 0;
  auto record = [&](std::int64_t epoch, Phase phase, const Matching& m) {
    StepRecord step;
    step.t = ++t;
    step.epoch = epoch;
    step.phase = phase;
    step.assignment = m.agent_to_arm();
    step.conflicted.assign(static_cast<size_t>(n), false);
    trace.steps.push_back(std::move(step));
  };

  for (std::int64_t epoch = 1; t < horizon; ++epoch) {
    const EpochPlan plan = PlanEpoch(n, epoch);
    for (std::int64_t k = 0; k < plan.explore_rounds && t < horizon; ++k) {
      const Matching pull = RoundRobinAssignment(t + 1, n);
      const StepOutcome outcome = Step(env, pull.agent_to_arm(), rng);
      estimator.Record(pull.agent_to_arm(), outcome);
      record(epoch, Phase::kExplore, pull);
    }
    if (t >= horizon) break;

    EpochRecord er;
    er.epoch = epoch;
    er.commit_step = t + 1;
    er.samples_per_pair = estimator.count(0, 0);
    er.committed = SelectMatching(estimator.EstimatedProfile(), objective);
    er.estimator_fingerprint = estimator.Fingerprint();
    const std::int64_t rounds = std::min(plan.exploit_rounds, horizon - t);
    // Commitment rewards never feed the estimator, so they are not drawn.
    for (std::int64_t k = 0; k < rounds; ++k) {
      record(epoch, Phase::kExploit, er.committed);
    }
    trace.epochs.push_back(std::move(er));
  }
  return trace;
}

}  // namespace stablewelfare
