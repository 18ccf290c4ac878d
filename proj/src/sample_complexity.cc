#include "stablewelfare/sample_complexity.h"

#include <cmath>
#include <limits>

#include "stablewelfare/error.h"

namespace stablewelfare {

std::int64_t SampleComplexity(int n, double gap, double alpha,
                              Objective objective) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (!std::isfinite(gap) || !(gap > 0.0)) {
    throw Error(ErrorCode::kInvalidGap, "gap must be finite and positive");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must lie in (0, 1)");
  }
  const double n2 = static_cast<double>(n) * n;
  const double factor = objective == Objective::kUtilitarian ? 2.0 : 8.0;
  const double samples = factor * n2 / (gap * gap) * std::log(4.0 * n2 / alpha);
  if (samples >= static_cast<double>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorCode::kInvalidGap, "gap too small: sample size overflows");
  }
  return static_cast<std::int64_t>(std::ceil(samples));
}

}  // namespace stablewelfare
