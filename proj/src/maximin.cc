#include "stablewelfare/maximin.h"

#include <optional>

#include "stablewelfare/deferred_acceptance.h"
#include "stablewelfare/rotations.h"
#include "stablewelfare/stability.h"

namespace stablewelfare {
namespace {

// Lowest-index arm whose matched utility equals the overall minimum.
std::optional<int> ArmAtMinimum(const UtilityProfile& profile, const Matching& m) {
  const double lowest = MaximinWelfare(profile, m);
  for (int arm = 0; arm < profile.n(); ++arm) {
    if (profile.arm_utility(arm, m.agent_of(arm)) == lowest) return arm;
  }
  return std::nullopt;
}

SideMaximinResult ArmSide(const UtilityProfile& profile) {
  const Matching arm_optimal = DeferredAcceptance(profile, Side::kArms);
  SideMaximinResult out{DeferredAcceptance(profile, Side::kAgents), 0};
  for (;;) {
    const std::optional<int> arm = ArmAtMinimum(profile, out.matching);
    if (!arm) return out;
    const int agent = out.matching.agent_of(*arm);
    if (arm_optimal.arm_of(agent) == *arm) return out;

    // Eliminate exposed rotations reached from `agent` until it moves.
    Matching next = out.matching;
    while (next.arm_of(agent) == *arm) {
      next = BreakMatching(profile, next, agent, arm_optimal).matching;
      ++out.break_steps;
    }
    if (!ArmAtMinimum(profile, next)) return out;
    out.matching = std::move(next);
  }
}

}  // namespace

SideMaximinResult SideMaximin(const UtilityProfile& profile, Side side) {
  if (side == Side::kArms) return ArmSide(profile);
  SideMaximinResult swapped = ArmSide(profile.Transposed());
  swapped.matching = swapped.matching.Inverted();
  return swapped;
}

Matching MaximinOptimal(const UtilityProfile& profile) {
  SideMaximinResult arm_side = SideMaximin(profile, Side::kArms);
  SideMaximinResult agent_side = SideMaximin(profile, Side::kAgents);
  if (MaximinWelfare(profile, agent_side.matching) >
      MaximinWelfare(profile, arm_side.matching)) {
    return agent_side.matching;
  }
  return arm_side.matching;
}

}  // namespace stablewelfare
