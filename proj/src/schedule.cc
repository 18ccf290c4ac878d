#include "stablewelfare/schedule.h"

#include <bit>
#include <limits>
#include <vector>

#include "stablewelfare/error.h"

namespace stablewelfare {

std::int64_t CeilLog2(std::int64_t x) {
  if (x < 1) throw Error(ErrorCode::kInvalidArgument, "CeilLog2 needs x >= 1");
  return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(x - 1)));
}

EpochPlan PlanEpoch(int n, std::int64_t epoch) {
  if (n < 1 || epoch < 1) {
    throw Error(ErrorCode::kInvalidArgument, "PlanEpoch needs n >= 1, epoch >= 1");
  }
  EpochPlan plan;
  plan.epoch = epoch;
  plan.explore_rounds = n * CeilLog2(epoch + 1);
  plan.exploit_rounds = epoch >= 62 ? std::numeric_limits<std::int64_t>::max()
                                    : std::int64_t{1} << epoch;
  return plan;
}

std::int64_t CumulativeExplorationRounds(std::int64_t l) {
  if (l < 1) throw Error(ErrorCode::kInvalidArgument, "epoch index must be >= 1");
  const std::int64_t floor_log2 =
      static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(l))) - 1;
  return (l + 1) * CeilLog2(l + 1) - (std::int64_t{1} << (floor_log2 + 1)) + 1;
}

Matching RoundRobinAssignment(std::int64_t t, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  std::vector<int> agent_to_arm(static_cast<size_t>(n));
  const std::int64_t shift = ((t % n) + n) % n;
  for (int agent = 0; agent < n; ++agent) {
    agent_to_arm[agent] = static_cast<int>((shift + agent + 1) % n);
  }
  return Matching::FromAgentToArm(std::move(agent_to_arm));
}

}  // namespace stablewelfare
