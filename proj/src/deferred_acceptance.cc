#include "stablewelfare/deferred_acceptance.h"

#include <vector>

namespace stablewelfare {
namespace {

Matching AgentProposing(const UtilityProfile& profile) {
  const int n = profile.n();
  std::vector<int> next_choice(n, 0);
  std::vector<int> holder(n, -1);  // arm -> tentatively accepted agent
  std::vector<int> free_agents;
  free_agents.reserve(n);
  for (int agent = n - 1; agent >= 0; --agent) free_agents.push_back(agent);

  // Stack pops the lowest index first; a rejected agent goes back on top and
  // proposes again before higher-indexed agents, which does not change the
  // outcome.
  while (!free_agents.empty()) {
    const int agent = free_agents.back();
    free_agents.pop_back();
    const int arm = profile.agent_preferences(agent)[next_choice[agent]++];
    const int incumbent = holder[arm];
    if (incumbent == -1) {
      holder[arm] = agent;
    } else if (profile.arm_prefers(arm, agent, incumbent)) {
      holder[arm] = agent;
      free_agents.push_back(incumbent);
    } else {
      free_agents.push_back(agent);
    }
  }

  std::vector<int> agent_to_arm(n);
  for (int arm = 0; arm < n; ++arm) agent_to_arm[holder[arm]] = arm;
  return Matching::FromAgentToArm(std::move(agent_to_arm));
}

}  // namespace

Matching DeferredAcceptance(const UtilityProfile& profile, Side proposing) {
  if (proposing == Side::kAgents) return AgentProposing(profile);
  return AgentProposing(profile.Transposed()).Inverted();
}

}  // namespace stablewelfare
