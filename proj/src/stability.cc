#include "stablewelfare/stability.h"

#include <algorithm>
#include <string>

#include "stablewelfare/error.h"

namespace stablewelfare {

void CheckSameSize(const UtilityProfile& profile, const Matching& matching) {
  if (profile.n() != matching.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matching has size " + std::to_string(matching.n()) +
                    " but profile has n = " + std::to_string(profile.n()));
  }
}

StabilityReport CheckStability(const UtilityProfile& profile,
                               const Matching& matching) {
  CheckSameSize(profile, matching);
  StabilityReport report;
  const int n = profile.n();
  for (int agent = 0; agent < n; ++agent) {
    const int current_arm = matching.arm_of(agent);
    for (int arm = 0; arm < n; ++arm) {
      if (profile.agent_prefers(agent, arm, current_arm) &&
          profile.arm_prefers(arm, agent, matching.agent_of(arm))) {
        report.blocking_pairs.emplace_back(agent, arm);
      }
    }
  }
  report.stable = report.blocking_pairs.empty();
  return report;
}

bool IsStable(const UtilityProfile& profile, const Matching& matching) {
  CheckSameSize(profile, matching);
  const int n = profile.n();
  for (int agent = 0; agent < n; ++agent) {
    const int current_arm = matching.arm_of(agent);
    for (int arm : profile.agent_preferences(agent)) {
      if (arm == current_arm) break;
      if (profile.arm_prefers(arm, agent, matching.agent_of(arm))) return false;
    }
  }
  return true;
}

double UtilitarianWelfare(const UtilityProfile& profile,
                          const Matching& matching) {
  CheckSameSize(profile, matching);
  double total = 0.0;
  for (int agent = 0; agent < profile.n(); ++agent) {
    total += profile.agent_utility(agent, matching.arm_of(agent));
  }
  for (int arm = 0; arm < profile.n(); ++arm) {
    total += profile.arm_utility(arm, matching.agent_of(arm));
  }
  return total;
}

double MaximinWelfare(const UtilityProfile& profile, const Matching& matching) {
  CheckSameSize(profile, matching);
  double lowest = profile.agent_utility(0, matching.arm_of(0));
  for (int agent = 0; agent < profile.n(); ++agent) {
    lowest = std::min(lowest, profile.agent_utility(agent, matching.arm_of(agent)));
  }
  for (int arm = 0; arm < profile.n(); ++arm) {
    lowest = std::min(lowest, profile.arm_utility(arm, matching.agent_of(arm)));
  }
  return lowest;
}

}  // namespace stablewelfare
