#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stablewelfare/epoch_etc.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

// Per-step quantities, all measured with the true means. A conflicted
// participant (or an arm nobody pulled alone) realises utility 0.

// optimum_welfare - sum of realised utilities of both sides.
double UtilitarianShortfall(const UtilityProfile& truth, double optimum_welfare,
                            std::span<const int> assignment);
// optimum_min - min of the 2N realised utilities.
double MaximinShortfall(const UtilityProfile& truth, double optimum_min,
                        std::span<const int> assignment);
// True iff the assignment is a conflict-free perfect matching that is stable
// under `truth`.
bool AssignmentIsStable(const UtilityProfile& truth,
                        std::span<const int> assignment);

// Cumulative regret against UtilitarianOptimal(truth), one entry per step.
// Throws Error(kTruthMismatch) if the trace was not produced on `truth`.
std::vector<double> UtilitarianRegretCurve(const SimulationTrace& trace,
                                           const UtilityProfile& truth);
// Cumulative regret against the value of MaximinOptimal(truth).
std::vector<double> MaximinRegretCurve(const SimulationTrace& trace,
                                       const UtilityProfile& truth);
// 1 where the step's assignment is stable under truth, 0 elsewhere.
std::vector<int> StabilityIndicatorCurve(const SimulationTrace& trace,
                                         const UtilityProfile& truth);

struct TraceRow {
  std::int64_t t = 0;
  std::int64_t epoch = 0;
  Phase phase = Phase::kExplore;
  double util_regret = 0.0;     // cumulative
  double maximin_regret = 0.0;  // cumulative
  int stable = 0;
};

// Rows at every step t with t % stride == 0, plus the final step.
std::vector<TraceRow> TraceRows(const SimulationTrace& trace,
                                const UtilityProfile& truth, std::int64_t stride);

}  // namespace stablewelfare
