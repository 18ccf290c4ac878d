#pragma once

#include <optional>
#include <vector>

#include "stablewelfare/matching.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

// Brute-force ground truth for small markets.

inline constexpr int kDefaultOracleCap = 8;

// kDefaultOracleCap unless STABLEWELFARE_ORACLE_CAP holds a positive integer.
int OracleCapFromEnvironment();

enum class Objective { kUtilitarian, kMaximin };

double Welfare(const UtilityProfile& profile, const Matching& matching,
               Objective objective);

struct StableEntry {
  Matching matching;
  double utilitarian = 0.0;
  double maximin = 0.0;
};

// All stable matchings in lexicographic order of the agent-to-arm map.
struct StableSet {
  std::vector<StableEntry> entries;

  bool Contains(const Matching& m) const;
  std::vector<Matching> Matchings() const;
};

// Walks permutations agent by agent, pruning as soon as two assigned pairs
// block each other. Throws Error(kOracleTooLarge) if n > cap.
StableSet EnumerateStableMatchings(const UtilityProfile& profile,
                                   int cap = kDefaultOracleCap);

struct OracleOptimum {
  Matching matching;  // first optimum in enumeration order
  double value = 0.0;
  // Best value among the other stable matchings; empty when the stable set
  // is a singleton.
  std::optional<double> second_best;
};

OracleOptimum OracleOptimal(const StableSet& stable_set, Objective objective);
OracleOptimum OracleOptimal(const UtilityProfile& profile, Objective objective,
                            int cap = kDefaultOracleCap);

}  // namespace stablewelfare
