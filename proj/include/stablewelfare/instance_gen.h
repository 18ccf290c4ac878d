#pragma once

#include <cstdint>

#include "stablewelfare/profile.h"

namespace stablewelfare {

// Every agent row and every arm row is an independent uniformly random
// permutation of {1, ..., n}. Deterministic in `seed` on every platform.
UtilityProfile RandomInstance(int n, std::uint64_t seed);

}  // namespace stablewelfare
