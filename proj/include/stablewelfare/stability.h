#pragma once

#include <utility>
#include <vector>

#include "stablewelfare/matching.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

struct StabilityReport {
  bool stable = true;
  // (agent, arm) pairs that prefer each other to their assigned partners,
  // ordered by agent then arm.
  std::vector<std::pair<int, int>> blocking_pairs;
};

StabilityReport CheckStability(const UtilityProfile& profile,
                               const Matching& matching);

// Shorthand for CheckStability(...).stable.
bool IsStable(const UtilityProfile& profile, const Matching& matching);

// Sum of the 2N matched utilities.
double UtilitarianWelfare(const UtilityProfile& profile,
                          const Matching& matching);

// Minimum of the 2N matched utilities.
double MaximinWelfare(const UtilityProfile& profile, const Matching& matching);

// Throws Error(kDimensionMismatch) if the sizes differ.
void CheckSameSize(const UtilityProfile& profile, const Matching& matching);

}  // namespace stablewelfare
