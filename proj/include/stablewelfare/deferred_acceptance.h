#pragma once

#include "stablewelfare/matching.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

// Gale-Shapley deferred acceptance. With Side::kAgents the result is the
// agent-optimal stable matching, with Side::kArms the arm-optimal one. Free
// proposers are served in ascending index order.
Matching DeferredAcceptance(const UtilityProfile& profile, Side proposing);

}  // namespace stablewelfare
