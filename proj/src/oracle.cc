#include "stablewelfare/oracle.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "stablewelfare/error.h"
#include "stablewelfare/stability.h"

namespace stablewelfare {
namespace {

class Enumerator {
 public:
  explicit Enumerator(const UtilityProfile& profile)
      : p_(profile),
        n_(profile.n()),
        arm_of_(static_cast<size_t>(n_), -1),
        taken_(static_cast<size_t>(n_), false) {}

  StableSet Run() {
    Extend(0);
    return std::move(result_);
  }

 private:
  // True if (agent, arm) together with an already assigned pair creates a
  // blocking pair among assigned participants.
  bool Conflicts(int agent, int arm) const {
    for (int other = 0; other < agent; ++other) {
      const int other_arm = arm_of_[other];
      if (p_.agent_prefers(agent, other_arm, arm) &&
          p_.arm_prefers(other_arm, agent, other)) {
        return true;
      }
      if (p_.agent_prefers(other, arm, other_arm) &&
          p_.arm_prefers(arm, other, agent)) {
        return true;
      }
    }
    return false;
  }

  void Extend(int agent) {
    if (agent == n_) {
      Matching m = Matching::FromAgentToArm(arm_of_);
      StableEntry entry{m, UtilitarianWelfare(p_, m), MaximinWelfare(p_, m)};
      result_.entries.push_back(std::move(entry));
      return;
    }
    for (int arm = 0; arm < n_; ++arm) {
      if (taken_[arm] || Conflicts(agent, arm)) continue;
      taken_[arm] = true;
      arm_of_[agent] = arm;
      Extend(agent + 1);
      taken_[arm] = false;
    }
    arm_of_[agent] = -1;
  }

  const UtilityProfile& p_;
  const int n_;
  std::vector<int> arm_of_;
  std::vector<bool> taken_;
  StableSet result_;
};

}  // namespace

int OracleCapFromEnvironment() {
  const char* raw = std::getenv("STABLEWELFARE_ORACLE_CAP");
  if (raw == nullptr) return kDefaultOracleCap;
  int cap = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, cap);
  if (ec != std::errc() || ptr != end || cap <= 0) return kDefaultOracleCap;
  return cap;
}

double Welfare(const UtilityProfile& profile, const Matching& matching,
               Objective objective) {
  return objective == Objective::kUtilitarian
             ? UtilitarianWelfare(profile, matching)
             : MaximinWelfare(profile, matching);
}

bool StableSet::Contains(const Matching& m) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const StableEntry& e) { return e.matching == m; });
}

std::vector<Matching> StableSet::Matchings() const {
  std::vector<Matching> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.matching);
  return out;
}

StableSet EnumerateStableMatchings(const UtilityProfile& profile, int cap) {
  if (profile.n() > cap) {
    throw Error(ErrorCode::kOracleTooLarge,
                "n = " + std::to_string(profile.n()) + " exceeds oracle cap " +
                    std::to_string(cap));
  }
  return Enumerator(profile).Run();
}

OracleOptimum OracleOptimal(const StableSet& stable_set, Objective objective) {
  auto value_of = [objective](const StableEntry& e) {
    return objective == Objective::kUtilitarian ? e.utilitarian : e.maximin;
  };
  size_t best = 0;
  for (size_t i = 1; i < stable_set.entries.size(); ++i) {
    if (value_of(stable_set.entries[i]) > value_of(stable_set.entries[best])) {
      best = i;
    }
  }
  OracleOptimum out{stable_set.entries[best].matching,
                    value_of(stable_set.entries[best]), std::nullopt};
  for (size_t i = 0; i < stable_set.entries.size(); ++i) {
    if (i == best) continue;
    const double v = value_of(stable_set.entries[i]);
    if (!out.second_best || v > *out.second_best) out.second_best = v;
  }
  return out;
}

OracleOptimum OracleOptimal(const UtilityProfile& profile, Objective objective,
                            int cap) {
  return OracleOptimal(EnumerateStableMatchings(profile, cap), objective);
}

}  // namespace stablewelfare
