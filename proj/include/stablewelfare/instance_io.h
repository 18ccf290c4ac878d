#pragma once

#include <string>
#include <string_view>

#include "stablewelfare/profile.h"

namespace stablewelfare {

// Instance documents are JSON objects:
//   {"n": 2,
//    "agent_utilities": [[...], [...]],   row i = agent i over arms
//    "arm_utilities":   [[...], [...]]}   row j = arm j over agents
// Utilities are written in shortest round-trip decimal form, so
// ParseInstance(SerializeInstance(p)) == p bit for bit.

// Throws Error(kParseError) naming the line and/or field on malformed input,
// and the ValidateProfile errors on well-formed but invalid utilities.
UtilityProfile ParseInstance(std::string_view text);
std::string SerializeInstance(const UtilityProfile& profile);

// File variants; Error(kIoError) when the file cannot be opened or written.
UtilityProfile ReadInstance(const std::string& path);
void WriteInstance(const UtilityProfile& profile, const std::string& path);

}  // namespace stablewelfare
