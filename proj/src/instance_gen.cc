#include "stablewelfare/instance_gen.h"

#include <numeric>
#include <utility>

#include "stablewelfare/error.h"
#include "stablewelfare/random.h"

namespace stablewelfare {

UtilityProfile RandomInstance(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  SplitMix64 rng(seed);
  auto random_rows = [&] {
    Matrix rows(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    for (auto& row : rows) {
      std::iota(row.begin(), row.end(), 1.0);
      // Fisher-Yates, written out for a platform-independent stream.
      for (size_t i = row.size() - 1; i > 0; --i) {
        std::swap(row[i], row[rng.UniformBelow(i + 1)]);
      }
    }
    return rows;
  };
  Matrix agents = random_rows();
  Matrix arms = random_rows();
  return ValidateProfile(agents, arms);
}

}  // namespace stablewelfare
