#include "stablewelfare/metrics.h"

#include <algorithm>

#include "stablewelfare/error.h"
#include "stablewelfare/maximin.h"
#include "stablewelfare/stability.h"
#include "stablewelfare/utilitarian.h"

namespace stablewelfare {
namespace {

void CheckTruth(const SimulationTrace& trace, const UtilityProfile& truth) {
  if (trace.n != truth.n() ||
      trace.truth_fingerprint != ProfileFingerprint(truth)) {
    throw Error(ErrorCode::kTruthMismatch,
                "trace was not generated on this utility profile");
  }
}

// Realised utility of every agent (first n) and arm (last n).
std::vector<double> Realised(const UtilityProfile& truth,
                             std::span<const int> assignment) {
  const int n = truth.n();
  if (static_cast<int>(assignment.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch, "one arm per agent required");
  }
  const std::vector<bool> conflicted = ConflictMask(assignment, n);
  std::vector<double> out(static_cast<size_t>(2 * n), 0.0);
  for (int agent = 0; agent < n; ++agent) {
    if (conflicted[agent]) continue;
    const int arm = assignment[agent];
    out[agent] = truth.agent_utility(agent, arm);
    out[n + arm] = truth.arm_utility(arm, agent);
  }
  return out;
}

}  // namespace

double UtilitarianShortfall(const UtilityProfile& truth, double optimum_welfare,
                            std::span<const int> assignment) {
  double total = 0.0;
  for (double u : Realised(truth, assignment)) total += u;
  return optimum_welfare - total;
}

double MaximinShortfall(const UtilityProfile& truth, double optimum_min,
                        std::span<const int> assignment) {
  const std::vector<double> realised = Realised(truth, assignment);
  return optimum_min - *std::min_element(realised.begin(), realised.end());
}

bool AssignmentIsStable(const UtilityProfile& truth,
                        std::span<const int> assignment) {
  const std::vector<bool> conflicted = ConflictMask(assignment, truth.n());
  if (std::find(conflicted.begin(), conflicted.end(), true) != conflicted.end()) {
    return false;
  }
  return IsStable(truth, Matching::FromAgentToArm(
                             std::vector<int>(assignment.begin(), assignment.end())));
}

std::vector<double> UtilitarianRegretCurve(const SimulationTrace& trace,
                                           const UtilityProfile& truth) {
  CheckTruth(trace, truth);
  const double optimum = UtilitarianWelfare(truth, UtilitarianOptimal(truth));
  std::vector<double> curve;
  curve.reserve(trace.steps.size());
  double total = 0.0;
  for (const auto& step : trace.steps) {
    total += UtilitarianShortfall(truth, optimum, step.assignment);
    curve.push_back(total);
  }
  return curve;
}

std::vector<double> MaximinRegretCurve(const SimulationTrace& trace,
                                       const UtilityProfile& truth) {
  CheckTruth(trace, truth);
  const double optimum = MaximinWelfare(truth, MaximinOptimal(truth));
  std::vector<double> curve;
  curve.reserve(trace.steps.size());
  double total = 0.0;
  for (const auto& step : trace.steps) {
    total += MaximinShortfall(truth, optimum, step.assignment);
    curve.push_back(total);
  }
  return curve;
}

std::vector<int> StabilityIndicatorCurve(const SimulationTrace& trace,
                                         const UtilityProfile& truth) {
  CheckTruth(trace, truth);
  std::vector<int> curve;
  curve.reserve(trace.steps.size());
  for (const auto& step : trace.steps) {
    curve.push_back(AssignmentIsStable(truth, step.assignment) ? 1 : 0);
  }
  return curve;
}

std::vector<TraceRow> TraceRows(const SimulationTrace& trace,
                                const UtilityProfile& truth, std::int64_t stride) {
  if (stride < 1) throw Error(ErrorCode::kInvalidArgument, "stride must be >= 1");
  const auto util = UtilitarianRegretCurve(trace, truth);
  const auto maximin = MaximinRegretCurve(trace, truth);
  const auto stable = StabilityIndicatorCurve(trace, truth);
  std::vector<TraceRow> rows;
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& step = trace.steps[k];
    if (step.t % stride != 0 && k + 1 != trace.steps.size()) continue;
    rows.push_back({step.t, step.epoch, step.phase, util[k], maximin[k], stable[k]});
  }
  return rows;
}

}  // namespace stablewelfare
