#pragma once

#include "stablewelfare/matching.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

struct SideMaximinResult {
  Matching matching;
  int break_steps = 0;  // BreakMatching calls performed
};

// Side::kArms: best stable matching among those whose minimum matched
// utility belongs to an arm. Starts at the agent-optimal matching and keeps
// breaking the mate of the lowest-index arm holding the minimum utility,
// stopping when that pair is arm-optimal or when no arm holds the minimum
// any more. Side::kAgents runs the same procedure with the roles exchanged.
SideMaximinResult SideMaximin(const UtilityProfile& profile, Side side);

// Stable matching maximising the minimum matched utility over both sides.
// Takes the better of the two side results; ties go to the arm side.
Matching MaximinOptimal(const UtilityProfile& profile);

}  // namespace stablewelfare
