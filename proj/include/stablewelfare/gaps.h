#pragma once

#include <optional>

#include "stablewelfare/oracle.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

// Instance-dependent separation constants. Quantities with nothing to compare
// (a single participant per side) are +infinity.
struct GapReport {
  double delta_a = 0.0;  // smallest gap inside one agent's row
  double delta_b = 0.0;  // smallest gap inside one arm's row
  double gamma_a = 0.0;  // smallest non-zero gap across all agent utilities
  double gamma_b = 0.0;  // smallest non-zero gap across all arm utilities
  double gamma = 0.0;    // min(gamma_a, gamma_b)
  // Utilitarian welfare of the best stable matching minus the runner-up;
  // +infinity if the stable matching is unique, empty if not computed.
  std::optional<double> delta_welfare;
  // min(delta/4N, delta_a/2, delta_b/2); empty iff delta_welfare is empty.
  std::optional<double> beta;
};

enum class WelfareGapMode {
  kSkip,        // never run the oracle
  kIfFeasible,  // run it when n <= oracle cap, otherwise leave delta empty
  kRequired,    // run it, or throw Error(kOracleTooLarge)
};

GapReport PreferenceGaps(const UtilityProfile& profile,
                         WelfareGapMode mode = WelfareGapMode::kIfFeasible,
                         int oracle_cap = kDefaultOracleCap);

}  // namespace stablewelfare
