#pragma once

#include <cstdint>

#include "stablewelfare/oracle.h"

namespace stablewelfare {

// Total exploration samples after which plain explore-then-commit recovers
// the optimal stable matching with probability at least 1 - alpha:
//   utilitarian: ceil(2 n^2 / beta^2 * ln(4 n^2 / alpha)), gap = beta
//   maximin:     ceil(8 n^2 / Gamma^2 * ln(4 n^2 / alpha)), gap = Gamma
// Throws Error(kInvalidGap) unless gap is finite and > 0, and
// Error(kInvalidAlpha) unless 0 < alpha < 1.
std::int64_t SampleComplexity(int n, double gap, double alpha,
                              Objective objective);

}  // namespace stablewelfare
