#include "stablewelfare/rotations.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "stablewelfare/deferred_acceptance.h"
#include "stablewelfare/error.h"
#include "stablewelfare/stability.h"

namespace stablewelfare {
namespace {

// First arm below matching.arm_of(agent) on the agent's list that prefers the
// agent to its partner in `matching`, or -1.
int NextProposalTarget(const UtilityProfile& profile, const Matching& matching,
                       int agent) {
  const auto prefs = profile.agent_preferences(agent);
  const int current = matching.arm_of(agent);
  auto it = std::find(prefs.begin(), prefs.end(), current);
  for (++it; it != prefs.end(); ++it) {
    if (profile.arm_prefers(*it, agent, matching.agent_of(*it))) return *it;
  }
  return -1;
}

// Rotation ids of every (agent, arm) pair, -1 for non-members.
std::vector<std::vector<int>> MembershipTable(const RotationDigraph& digraph,
                                              int n) {
  std::vector<std::vector<int>> member(n, std::vector<int>(n, -1));
  for (int id = 0; id < digraph.node_count(); ++id) {
    for (const auto& pr : digraph.rotations[id].pairs()) {
      member[pr.agent][pr.arm] = id;
    }
  }
  return member;
}

}  // namespace

Rotation Rotation::FromCycle(std::vector<RotationPair> cycle) {
  if (cycle.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "rotation needs at least 2 pairs");
  }
  std::set<int> agents, arms;
  for (const auto& pr : cycle) {
    agents.insert(pr.agent);
    arms.insert(pr.arm);
  }
  if (agents.size() != cycle.size() || arms.size() != cycle.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "rotation repeats an agent or an arm");
  }
  auto first = std::min_element(
      cycle.begin(), cycle.end(),
      [](const RotationPair& x, const RotationPair& y) { return x.agent < y.agent; });
  std::rotate(cycle.begin(), first, cycle.end());
  Rotation r;
  r.pairs_ = std::move(cycle);
  return r;
}

std::string Rotation::ToString() const {
  std::ostringstream out;
  for (size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out << ' ';
    out << "(a" << pairs_[i].agent << ",b" << pairs_[i].arm << ')';
  }
  return out.str();
}

Matching EliminateRotation(const Matching& matching, const Rotation& rotation) {
  const auto& pairs = rotation.pairs();
  for (const auto& pr : pairs) {
    if (pr.agent < 0 || pr.agent >= matching.n() || pr.arm < 0 ||
        pr.arm >= matching.n() || matching.arm_of(pr.agent) != pr.arm) {
      throw Error(ErrorCode::kRotationNotExposed,
                  "pair (a" + std::to_string(pr.agent) + ",b" +
                      std::to_string(pr.arm) + ") is not in the matching");
    }
  }
  std::vector<int> agent_to_arm = matching.agent_to_arm();
  const size_t r = pairs.size();
  for (size_t i = 0; i < r; ++i) {
    agent_to_arm[pairs[i].agent] = pairs[(i + 1) % r].arm;
  }
  return Matching::FromAgentToArm(std::move(agent_to_arm));
}

double RotationWeight(const UtilityProfile& profile, const Rotation& rotation) {
  const auto& pairs = rotation.pairs();
  const size_t r = pairs.size();
  double w = 0.0;
  for (size_t i = 0; i < r; ++i) {
    const auto& cur = pairs[i];
    const auto& next = pairs[(i + 1) % r];
    const auto& prev = pairs[(i + r - 1) % r];
    w += profile.agent_utility(cur.agent, cur.arm) -
         profile.agent_utility(cur.agent, next.arm);
    w += profile.arm_utility(cur.arm, cur.agent) -
         profile.arm_utility(cur.arm, prev.agent);
  }
  return w;
}

BreakResult BreakMatching(const UtilityProfile& profile,
                          const Matching& matching, int agent) {
  CheckSameSize(profile, matching);
  return BreakMatching(profile, matching, agent,
                       DeferredAcceptance(profile, Side::kArms));
}

BreakResult BreakMatching(const UtilityProfile& profile,
                          const Matching& matching, int agent,
                          const Matching& arm_optimal) {
  CheckSameSize(profile, matching);
  if (agent < 0 || agent >= profile.n()) {
    throw Error(ErrorCode::kInvalidArgument, "agent index out of range");
  }
  if (!IsStable(profile, matching)) {
    throw Error(ErrorCode::kUnstableInput, "break-matching needs a stable matching");
  }
  if (matching.arm_of(agent) == arm_optimal.arm_of(agent)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "agent a" + std::to_string(agent) +
                    " already holds its arm-optimal partner");
  }

  std::vector<int> position(static_cast<size_t>(profile.n()), -1);
  std::vector<int> chain;
  int proposer = agent;
  while (position[proposer] == -1) {
    position[proposer] = static_cast<int>(chain.size());
    chain.push_back(proposer);
    const int target = NextProposalTarget(profile, matching, proposer);
    if (target == -1) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  "proposal sequence ran off the list of a" +
                      std::to_string(proposer));
    }
    proposer = matching.agent_of(target);
  }

  std::vector<RotationPair> cycle;
  for (size_t k = static_cast<size_t>(position[proposer]); k < chain.size(); ++k) {
    cycle.push_back({chain[k], matching.arm_of(chain[k])});
  }
  Rotation rotation = Rotation::FromCycle(std::move(cycle));
  Matching next = EliminateRotation(matching, rotation);
  return {std::move(rotation), std::move(next)};
}

RotationDigraph EnumerateRotations(const UtilityProfile& profile) {
  RotationDigraph g;
  g.agent_optimal = DeferredAcceptance(profile, Side::kAgents);
  g.arm_optimal = DeferredAcceptance(profile, Side::kArms);

  const int n = profile.n();
  // Each elimination moves at least two agents strictly down their lists.
  const int max_steps = n * n;
  Matching current = g.agent_optimal;
  std::set<Rotation> seen;
  while (current != g.arm_optimal) {
    if (g.node_count() >= max_steps) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  "rotation walk did not reach the arm-optimal matching");
    }
    int agent = 0;
    while (current.arm_of(agent) == g.arm_optimal.arm_of(agent)) ++agent;
    BreakResult step = BreakMatching(profile, current, agent, g.arm_optimal);
    if (!seen.insert(step.rotation).second) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  "rotation " + step.rotation.ToString() + " found twice");
    }
    g.elimination_order.push_back(g.node_count());
    g.walk.push_back(current);
    g.weights.push_back(RotationWeight(profile, step.rotation));
    g.rotations.push_back(std::move(step.rotation));
    current = std::move(step.matching);
  }
  g.walk.push_back(current);
  return g;
}

void AddSparsePredecessorEdges(const UtilityProfile& profile,
                               RotationDigraph& g) {
  const int n = profile.n();
  const auto member = MembershipTable(g, n);
  std::set<std::pair<int, int>> edges;

  // Rule (i): consecutive rotation pairs along each agent's list.
  for (int agent = 0; agent < n; ++agent) {
    int previous = -1;
    for (int arm : profile.agent_preferences(agent)) {
      const int id = member[agent][arm];
      if (id == -1) continue;
      if (previous != -1 && previous != id) edges.emplace(previous, id);
      previous = id;
    }
  }

  // Rule (ii): pairs skipped over by an arm's improvement.
  for (int id = 0; id < g.node_count(); ++id) {
    const auto& pairs = g.rotations[id].pairs();
    const size_t r = pairs.size();
    for (size_t j = 0; j < r; ++j) {
      const int arm = pairs[j].arm;
      const int old_mate = pairs[j].agent;
      const int new_mate = pairs[(j + r - 1) % r].agent;
      for (int agent : profile.arm_preferences(arm)) {
        if (!profile.arm_prefers(arm, agent, old_mate)) break;
        if (!profile.arm_prefers(arm, new_mate, agent)) continue;
        if (member[agent][arm] != -1) continue;
        // Only pairs the agent would otherwise fall past matter.
        if (!profile.agent_prefers(agent, arm, g.arm_optimal.arm_of(agent))) {
          continue;
        }
        const auto prefs = profile.agent_preferences(agent);
        auto pos = std::find(prefs.begin(), prefs.end(), arm);
        while (pos != prefs.begin()) {
          --pos;
          const int mover = member[agent][*pos];
          if (mover == -1) continue;
          if (mover != id) edges.emplace(id, mover);
          break;
        }
      }
    }
  }

  g.edges.assign(edges.begin(), edges.end());
}

RotationDigraph BuildRotationDigraph(const UtilityProfile& profile) {
  RotationDigraph g = EnumerateRotations(profile);
  AddSparsePredecessorEdges(profile, g);
  return g;
}

bool IsPredecessorClosed(const RotationDigraph& digraph,
                         const std::vector<int>& nodes) {
  std::vector<bool> in(static_cast<size_t>(digraph.node_count()), false);
  for (int v : nodes) in[v] = true;
  return std::all_of(digraph.edges.begin(), digraph.edges.end(),
                     [&](const auto& e) { return !in[e.second] || in[e.first]; });
}

Matching ApplyClosedSubset(const RotationDigraph& digraph,
                           const std::vector<int>& nodes) {
  std::vector<bool> in(static_cast<size_t>(digraph.node_count()), false);
  for (int v : nodes) in[v] = true;
  Matching m = digraph.agent_optimal;
  for (int id : digraph.elimination_order) {
    if (in[id]) m = EliminateRotation(m, digraph.rotations[id]);
  }
  return m;
}

}  // namespace stablewelfare
