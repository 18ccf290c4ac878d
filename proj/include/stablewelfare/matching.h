#pragma once

#include <compare>
#include <string>
#include <vector>

namespace stablewelfare {

// A perfect one-to-one assignment of agents to arms. Both directions are kept
// so that m(a_i) = b_j iff m(b_j) = a_i holds by construction.
class Matching {
 public:
  Matching() = default;

  // Throws Error(kInvalidArgument) unless `agent_to_arm` is a permutation.
  static Matching FromAgentToArm(std::vector<int> agent_to_arm);
  static Matching Identity(int n);

  int n() const { return static_cast<int>(agent_to_arm_.size()); }
  int arm_of(int agent) const { return agent_to_arm_[static_cast<size_t>(agent)]; }
  int agent_of(int arm) const { return arm_to_agent_[static_cast<size_t>(arm)]; }

  const std::vector<int>& agent_to_arm() const { return agent_to_arm_; }
  const std::vector<int>& arm_to_agent() const { return arm_to_agent_; }

  // The same pairs viewed from the arm side (for role-swapped profiles).
  Matching Inverted() const;

  // "a0 -> b2" lines, 0-based.
  std::string ToLines() const;
  // "[2 0 1]" one-line permutation form.
  std::string ToPermutationString() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.agent_to_arm_ == b.agent_to_arm_;
  }
  friend auto operator<=>(const Matching& a, const Matching& b) {
    return a.agent_to_arm_ <=> b.agent_to_arm_;
  }

 private:
  std::vector<int> agent_to_arm_;
  std::vector<int> arm_to_agent_;
};

}  // namespace stablewelfare
