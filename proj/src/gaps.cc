#include "stablewelfare/gaps.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace stablewelfare {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double WithinSideGap(const Matrix& rows) {
  double gap = kInf;
  for (const auto& row : rows) {
    std::vector<double> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 1; k < sorted.size(); ++k) {
      gap = std::min(gap, sorted[k] - sorted[k - 1]);
    }
  }
  return gap;
}

// Smallest non-zero difference between any two entries; sorting all values
// makes the minimum an adjacent difference.
double CrossSideGap(const Matrix& rows) {
  std::vector<double> all;
  for (const auto& row : rows) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  double gap = kInf;
  for (size_t k = 1; k < all.size(); ++k) {
    const double d = all[k] - all[k - 1];
    if (d > 0.0) gap = std::min(gap, d);
  }
  return gap;
}

}  // namespace

GapReport PreferenceGaps(const UtilityProfile& profile, WelfareGapMode mode,
                         int oracle_cap) {
  const Matrix agents = profile.agent_matrix();
  const Matrix arms = profile.arm_matrix();

  GapReport report;
  report.delta_a = WithinSideGap(agents);
  report.delta_b = WithinSideGap(arms);
  report.gamma_a = CrossSideGap(agents);
  report.gamma_b = CrossSideGap(arms);
  report.gamma = std::min(report.gamma_a, report.gamma_b);

  const bool run_oracle =
      mode == WelfareGapMode::kRequired ||
      (mode == WelfareGapMode::kIfFeasible && profile.n() <= oracle_cap);
  if (!run_oracle) return report;

  const OracleOptimum best =
      OracleOptimal(profile, Objective::kUtilitarian, oracle_cap);
  report.delta_welfare =
      best.second_best ? best.value - *best.second_best : kInf;
  report.beta = std::min({*report.delta_welfare / (4.0 * profile.n()),
                          report.delta_a / 2.0, report.delta_b / 2.0});
  return report;
}

}  // namespace stablewelfare
