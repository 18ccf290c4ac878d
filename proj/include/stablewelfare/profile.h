#pragma once

#include <span>
#include <vector>

namespace stablewelfare {

using Matrix = std::vector<std::vector<double>>;

// Which side of the market proposes (or is being optimised for).
enum class Side { kAgents, kArms };

Side Other(Side side);

// Cardinal utilities for both sides of an N x N market.
//
// Row i of the agent matrix holds agent i's utility for each arm; row j of the
// arm matrix holds arm j's utility for each agent. The type guarantees that
// every entry is finite and that every row is strict (pairwise distinct), so
// each participant has a strict preference order. Non-negativity is only
// required of externally supplied data (see ValidateProfile); sample means
// built during learning may dip below zero.
class UtilityProfile {
 public:
  static UtilityProfile FromMatrices(const Matrix& agent_utilities,
                                     const Matrix& arm_utilities);

  int n() const { return n_; }

  double agent_utility(int agent, int arm) const {
    return agent_[static_cast<size_t>(agent * n_ + arm)];
  }
  double arm_utility(int arm, int agent) const {
    return arm_[static_cast<size_t>(arm * n_ + agent)];
  }

  // Utility of `who` (on side `side`) for partner `partner` on the other side.
  double utility(Side side, int who, int partner) const {
    return side == Side::kAgents ? agent_utility(who, partner)
                                 : arm_utility(who, partner);
  }

  // Partners ordered from most to least preferred.
  std::span<const int> agent_preferences(int agent) const {
    return {agent_prefs_.data() + agent * n_, static_cast<size_t>(n_)};
  }
  std::span<const int> arm_preferences(int arm) const {
    return {arm_prefs_.data() + arm * n_, static_cast<size_t>(n_)};
  }

  bool agent_prefers(int agent, int arm, int other_arm) const {
    return agent_utility(agent, arm) > agent_utility(agent, other_arm);
  }
  bool arm_prefers(int arm, int agent, int other_agent) const {
    return arm_utility(arm, agent) > arm_utility(arm, other_agent);
  }

  Matrix agent_matrix() const;
  Matrix arm_matrix() const;

  // The same market with agents and arms exchanging roles.
  UtilityProfile Transposed() const;

  friend bool operator==(const UtilityProfile& a, const UtilityProfile& b) {
    return a.n_ == b.n_ && a.agent_ == b.agent_ && a.arm_ == b.arm_;
  }

 private:
  int n_ = 0;
  std::vector<double> agent_;
  std::vector<double> arm_;
  std::vector<int> agent_prefs_;
  std::vector<int> arm_prefs_;
};

// Entry point for user-supplied utilities: shape, finiteness, strictness and
// non-negativity. Throws Error.
UtilityProfile ValidateProfile(const Matrix& agent_utilities,
                               const Matrix& arm_utilities);

}  // namespace stablewelfare
