// Exit-gate checks. One line per criterion; the process fails if any does.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stablewelfare/batch.h"
#include "stablewelfare/deferred_acceptance.h"
#include "stablewelfare/gaps.h"
#include "stablewelfare/instance_gen.h"
#include "stablewelfare/instance_io.h"
#include "stablewelfare/maximin.h"
#include "stablewelfare/oracle.h"
#include "stablewelfare/random.h"
#include "stablewelfare/rotations.h"
#include "stablewelfare/sample_complexity.h"
#include "stablewelfare/schedule.h"
#include "stablewelfare/stability.h"
#include "stablewelfare/utilitarian.h"

using namespace stablewelfare;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kExampleSeconds = 1.0;
constexpr int kSweepInstances = 500;
constexpr double kSweepSeconds = 60.0;
constexpr double kRotationTolerance = 1e-9;
constexpr int kClosureRotationLimit = 12;
constexpr std::int64_t kScheduleEpochs = 100000;
constexpr double kScheduleSeconds = 1.0;
constexpr int kPerturbInstances = 200;
constexpr int kPerturbDraws = 5;
constexpr int kRegretN = 5;
constexpr int kRegretReplications = 200;
constexpr std::int64_t kRegretHorizon = std::int64_t{1} << 16;
constexpr double kTailFraction = 0.10;
constexpr double kTailRegretRatio = 0.02;
constexpr double kOptimalShare = 0.95;
constexpr double kTailStability = 0.95;
constexpr double kRegretSeconds = 600.0;
constexpr std::int64_t kUtilitarianSamples = 58611;
constexpr std::int64_t kMaximinSamples = 91579;

int failures = 0;

void Report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  ("
            << detail << ")" << std::endl;
  if (!pass) ++failures;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string Fixture(const std::string& name) {
  return std::string(STABLEWELFARE_DATA_DIR) + "/" + name;
}

std::string Num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

Matching M(std::vector<int> perm) { return Matching::FromAgentToArm(std::move(perm)); }

void CyclicMarket() {
  const auto start = std::chrono::steady_clock::now();
  const UtilityProfile p = ReadInstance(Fixture("cyclic4.json"));
  const Matching agent_opt = M({0, 1, 2, 3}), arm_opt = M({3, 0, 1, 2});
  const Matching fair = M({1, 2, 3, 0}), best = M({2, 3, 0, 1});
  bool ok = DeferredAcceptance(p, Side::kAgents) == agent_opt;
  ok = ok && DeferredAcceptance(p, Side::kArms) == arm_opt;
  const Matching u = UtilitarianOptimal(p);
  const Matching m = MaximinOptimal(p);
  ok = ok && u == best && UtilitarianWelfare(p, u) == 18.0;
  ok = ok && m == fair && MaximinWelfare(p, m) == 1.7;
  const StableSet set = EnumerateStableMatchings(p);
  ok = ok && set.entries.size() == 4 && set.Contains(agent_opt) && set.Contains(arm_opt) &&
       set.Contains(fair) && set.Contains(best);
  const double secs = Seconds(start);
  Report(1, "cyclic market exactness", ok && secs < kExampleSeconds,
         "utilitarian welfare " + Num(UtilitarianWelfare(p, u)) + ", maximin " +
             Num(MaximinWelfare(p, m)) + ", " + std::to_string(set.entries.size()) +
             " stable matchings, " + Num(secs) + " s");
}

void SwapMarket() {
  const UtilityProfile truth = ReadInstance(Fixture("swap2.json"));
  const UtilityProfile estimate = ReadInstance(Fixture("swap2_estimated.json"));
  const Matching agent_opt = M({1, 0}), best = M({0, 1});
  const Matching picked = UtilitarianOptimal(estimate);
  const bool selects_agent_opt = picked == agent_opt;
  const bool flagged_unstable = !IsStable(truth, picked);
  const bool truth_selects_best = UtilitarianOptimal(truth) == best;
  Report(2, "swap market failure mode",
         selects_agent_opt && flagged_unstable && truth_selects_best,
         std::string("estimate selects agent-optimal: ") + (selects_agent_opt ? "yes" : "no") +
             ", flagged unstable under truth: " + (flagged_unstable ? "yes" : "no") +
             ", truth selects utilitarian optimum: " + (truth_selects_best ? "yes" : "no"));
}

void CrossOver() {
  const UtilityProfile a_truth = ReadInstance(Fixture("unique2_a.json"));
  const UtilityProfile a_est = ReadInstance(Fixture("unique2_a_estimated.json"));
  const UtilityProfile b_truth = ReadInstance(Fixture("unique2_b.json"));
  const UtilityProfile b_est = ReadInstance(Fixture("unique2_b_estimated.json"));
  const bool a_util = IsStable(a_truth, UtilitarianOptimal(a_est));
  const bool a_fair = IsStable(a_truth, MaximinOptimal(a_est));
  const bool b_util = IsStable(b_truth, UtilitarianOptimal(b_est));
  const bool b_fair = IsStable(b_truth, MaximinOptimal(b_est));
  Report(3, "estimate cross-over", !a_util && a_fair && b_util && !b_fair,
         std::string("first market: utilitarian ") + (a_util ? "stable" : "unstable") +
             ", maximin " + (a_fair ? "stable" : "unstable") + "; second market: utilitarian " +
             (b_util ? "stable" : "unstable") + ", maximin " + (b_fair ? "stable" : "unstable"));
}

int SweepSize(int seed) { return 3 + seed % 5; }

void OracleSweep() {
  const auto start = std::chrono::steady_clock::now();
  int util_ok = 0, fair_ok = 0;
  for (int seed = 1; seed <= kSweepInstances; ++seed) {
    const UtilityProfile p = RandomInstance(SweepSize(seed), static_cast<std::uint64_t>(seed));
    const StableSet set = EnumerateStableMatchings(p);
    if (UtilitarianWelfare(p, UtilitarianOptimal(p)) == OracleOptimal(set, Objective::kUtilitarian).value) {
      ++util_ok;
    }
    if (MaximinWelfare(p, MaximinOptimal(p)) == OracleOptimal(set, Objective::kMaximin).value) {
      ++fair_ok;
    }
  }
  const double secs = Seconds(start);
  Report(4, "oracle equivalence sweep",
         util_ok == kSweepInstances && fair_ok == kSweepInstances && secs < kSweepSeconds,
         "utilitarian " + std::to_string(util_ok) + "/" + std::to_string(kSweepInstances) +
             ", maximin " + std::to_string(fair_ok) + "/" + std::to_string(kSweepInstances) +
             ", " + Num(secs) + " s");
}

void RotationMachinery() {
  int steps = 0, identity_failures = 0, closure_checked = 0, closure_failures = 0;
  double worst = 0.0;
  for (int seed = 1; seed <= kSweepInstances; ++seed) {
    const UtilityProfile p = RandomInstance(SweepSize(seed), static_cast<std::uint64_t>(seed));
    const Matching arm_opt = DeferredAcceptance(p, Side::kArms);
    Matching m = DeferredAcceptance(p, Side::kAgents);
    while (!(m == arm_opt)) {
      int agent = 0;
      while (m.arm_of(agent) == arm_opt.arm_of(agent)) ++agent;
      const BreakResult r = BreakMatching(p, m, agent, arm_opt);
      const double gap = std::abs(UtilitarianWelfare(p, r.matching) -
                                  (UtilitarianWelfare(p, m) - RotationWeight(p, r.rotation)));
      worst = std::max(worst, gap);
      if (gap > kRotationTolerance) ++identity_failures;
      ++steps;
      m = r.matching;
    }

    const RotationDigraph g = BuildRotationDigraph(p);
    if (g.node_count() > kClosureRotationLimit) continue;
    ++closure_checked;
    std::set<Matching> generated;
    for (unsigned mask = 0; mask < (1u << g.node_count()); ++mask) {
      std::vector<int> nodes;
      for (int v = 0; v < g.node_count(); ++v) {
        if (mask >> v & 1u) nodes.push_back(v);
      }
      if (IsPredecessorClosed(g, nodes)) generated.insert(ApplyClosedSubset(g, nodes));
    }
    const auto oracle = EnumerateStableMatchings(p).Matchings();
    if (generated != std::set<Matching>(oracle.begin(), oracle.end())) ++closure_failures;
  }
  Report(5, "rotation machinery", identity_failures == 0 && closure_failures == 0,
         std::to_string(steps) + " break steps, max welfare-identity error " + Num(worst) + "; " +
             std::to_string(closure_checked - closure_failures) + "/" +
             std::to_string(closure_checked) + " closure sets equal the stable set");
}

void ScheduleIdentity() {
  const auto start = std::chrono::steady_clock::now();
  std::int64_t direct = 0, mismatches = 0;
  for (std::int64_t l = 1; l <= kScheduleEpochs; ++l) {
    std::int64_t ceil_log = 0;
    while ((std::int64_t{1} << ceil_log) < l + 1) ++ceil_log;
    direct += ceil_log;
    if (CumulativeExplorationRounds(l) != direct) ++mismatches;
  }
  const double secs = Seconds(start);
  Report(6, "exploration schedule identity", mismatches == 0 && secs < kScheduleSeconds,
         std::to_string(mismatches) + " mismatches up to l = " + std::to_string(kScheduleEpochs) +
             ", " + Num(secs) + " s");
}

UtilityProfile Perturb(const UtilityProfile& p, double bound, SplitMix64& rng) {
  Matrix a = p.agent_matrix(), b = p.arm_matrix();
  for (auto* m : {&a, &b}) {
    for (auto& row : *m) {
      for (double& x : row) x += bound * (2.0 * rng.Uniform01() - 1.0);
    }
  }
  return UtilityProfile::FromMatrices(a, b);
}

void PerturbationRobustness() {
  SplitMix64 rng(2718);
  int instances = 0, util_failures = 0, fair_failures = 0;
  for (std::uint64_t seed = 1; instances < kPerturbInstances; ++seed) {
    const UtilityProfile p = RandomInstance(3 + static_cast<int>(seed % 4), 90000 + seed);
    const GapReport g = PreferenceGaps(p, WelfareGapMode::kRequired);
    if (!(*g.beta > 0.0)) continue;  // tied optimum: no margin to test
    ++instances;
    const Matching util = UtilitarianOptimal(p);
    const double fair_value = MaximinWelfare(p, MaximinOptimal(p));
    for (int draw = 0; draw < kPerturbDraws; ++draw) {
      if (!(UtilitarianOptimal(Perturb(p, *g.beta, rng)) == util)) ++util_failures;
      if (MaximinWelfare(p, MaximinOptimal(Perturb(p, g.gamma / 2.0, rng))) != fair_value) {
        ++fair_failures;
      }
    }
  }
  Report(7, "perturbation robustness", util_failures == 0 && fair_failures == 0,
         std::to_string(instances) + " instances x " + std::to_string(kPerturbDraws) +
             " draws: utilitarian failures " + std::to_string(util_failures) +
             ", maximin failures " + std::to_string(fair_failures));
}

void RegretConvergence() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (Objective obj : {Objective::kUtilitarian, Objective::kMaximin}) {
    BatchConfig config;
    config.n = kRegretN;
    config.algorithm = obj;
    config.horizon = kRegretHorizon;
    config.replications = kRegretReplications;
    config.seed = 2026;
    config.stride = kRegretHorizon;
    config.tail_fraction = kTailFraction;
    const BatchResult r = RunBatch(config);
    double first = 0, tail = 0, stable = 0, optimal = 0;
    for (const ReplicationResult& rep : r.replications) {
      const bool util = obj == Objective::kUtilitarian;
      first += util ? rep.first_util_shortfall : rep.first_maximin_shortfall;
      tail += util ? rep.tail_util_per_step : rep.tail_maximin_per_step;
      stable += rep.tail_stability;
      optimal += rep.final_commit_optimal ? 1 : 0;
    }
    const double reps = kRegretReplications;
    first /= reps;
    tail /= reps;
    stable /= reps;
    optimal /= reps;
    ok = ok && tail <= kTailRegretRatio * first && optimal >= kOptimalShare &&
         stable >= kTailStability;
    detail += std::string(obj == Objective::kUtilitarian ? "utilitarian" : "maximin") +
              ": tail regret/step " + Num(tail) + " vs first step " + Num(first) +
              ", optimal commits " + Num(optimal) + ", tail stability " + Num(stable) + "; ";
  }
  const double secs = Seconds(start);
  Report(8, "regret convergence", ok && secs < kRegretSeconds, detail + Num(secs) + " s");
}

void SampleSizes() {
  const std::int64_t util = SampleComplexity(4, 0.0625, 0.05, Objective::kUtilitarian);
  const std::int64_t fair = SampleComplexity(4, 0.1, 0.05, Objective::kMaximin);
  Report(9, "sample-complexity calculators", util == kUtilitarianSamples && fair == kMaximinSamples,
         "utilitarian " + std::to_string(util) + " (expected " + std::to_string(kUtilitarianSamples) +
             "), maximin " + std::to_string(fair) + " (expected " + std::to_string(kMaximinSamples) + ")");
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Determinism() {
  const fs::path root = fs::temp_directory_path() / "stablewelfare_acceptance_determinism";
  fs::remove_all(root);
  std::vector<fs::path> dirs = {root / "first", root / "second"};
  bool ran = true;
  for (const fs::path& dir : dirs) {
    const std::string command = std::string("\"") + STABLEWELFARE_CLI_PATH +
                                "\" simulate --n 5 --seed 11 --algo utilitarian-etc --horizon 4096"
                                " --replications 20 --stride 16 --out \"" + dir.string() +
                                "\" > /dev/null";
    ran = ran && std::system(command.c_str()) == 0;
  }
  int files = 0, differing = 0;
  if (ran) {
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      ++files;
      const fs::path other = dirs[1] / entry.path().filename();
      if (!fs::exists(other) || Slurp(entry.path()) != Slurp(other)) ++differing;
    }
  }
  Report(10, "simulate determinism", ran && files > 0 && differing == 0,
         std::to_string(files) + " files compared, " + std::to_string(differing) + " differ");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      CyclicMarket, SwapMarket, CrossOver, OracleSweep, RotationMachinery,
      ScheduleIdentity, PerturbationRobustness, RegretConvergence, SampleSizes, Determinism};
  for (const auto& criterion : criteria) criterion();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
