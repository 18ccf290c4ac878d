#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "stablewelfare/error.h"

namespace stablewelfare::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadInput = 3;      // unreadable or malformed files
inline constexpr int kExitInvalid = 4;       // well-formed but invalid values
inline constexpr int kExitTooLarge = 5;      // brute-force oracle refused
inline constexpr int kExitInternal = 6;

int ExitCodeFor(ErrorCode code);

// Parses `args` (without the program name) and runs one subcommand.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace stablewelfare::cli
