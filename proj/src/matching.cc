#include "stablewelfare/matching.h"

#include <numeric>
#include <sstream>

#include "stablewelfare/error.h"

namespace stablewelfare {

Matching Matching::FromAgentToArm(std::vector<int> agent_to_arm) {
  const int n = static_cast<int>(agent_to_arm.size());
  Matching m;
  m.arm_to_agent_.assign(agent_to_arm.size(), -1);
  for (int agent = 0; agent < n; ++agent) {
    const int arm = agent_to_arm[agent];
    if (arm < 0 || arm >= n || m.arm_to_agent_[arm] != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "agent-to-arm map is not a permutation");
    }
    m.arm_to_agent_[arm] = agent;
  }
  m.agent_to_arm_ = std::move(agent_to_arm);
  return m;
}

Matching Matching::Identity(int n) {
  std::vector<int> ids(static_cast<size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return FromAgentToArm(std::move(ids));
}

Matching Matching::Inverted() const {
  Matching m;
  m.agent_to_arm_ = arm_to_agent_;
  m.arm_to_agent_ = agent_to_arm_;
  return m;
}

std::string Matching::ToLines() const {
  std::ostringstream out;
  for (int agent = 0; agent < n(); ++agent) {
    out << 'a' << agent << " -> b" << arm_of(agent) << '\n';
  }
  return out.str();
}

std::string Matching::ToPermutationString() const {
  std::ostringstream out;
  out << '[';
  for (int agent = 0; agent < n(); ++agent) {
    if (agent) out << ' ';
    out << arm_of(agent);
  }
  out << ']';
  return out.str();
}

}  // namespace stablewelfare
