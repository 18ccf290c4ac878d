#include <doctest.h>

#include <cmath>
#include <map>

#include "stablewelfare/batch.h"
#include "stablewelfare/epoch_etc.h"
#include "stablewelfare/error.h"
#include "stablewelfare/instance_gen.h"
#include "stablewelfare/metrics.h"
#include "stablewelfare/random.h"
#include "stablewelfare/sample_complexity.h"
#include "stablewelfare/schedule.h"
#include "stablewelfare/stability.h"
#include "stablewelfare/utilitarian.h"
#include "test_support.h"

using namespace stablewelfare;
using namespace testing_support;

namespace {

SimulationTrace FixedTrace(const UtilityProfile& truth,
                           const std::vector<std::vector<int>>& assignments) {
  SimulationTrace trace;
  trace.n = truth.n();
  trace.truth_fingerprint = ProfileFingerprint(truth);
  trace.horizon = static_cast<std::int64_t>(assignments.size());
  for (size_t k = 0; k < assignments.size(); ++k) {
    StepRecord step;
    step.t = static_cast<std::int64_t>(k) + 1;
    step.epoch = 1;
    step.assignment = assignments[k];
    step.conflicted = ConflictMask(assignments[k], truth.n());
    trace.steps.push_back(step);
  }
  return trace;
}

}  // namespace

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(1234567);
  CHECK(rng() == 6457827717110365317ULL);
  CHECK(rng() == 3203168211198807973ULL);
  CHECK(rng() == 9817491932198370423ULL);
  CHECK(rng() == 4593380528125082431ULL);
  CHECK(rng() == 16408922859458223821ULL);
}

TEST_CASE("samplers") {
  SplitMix64 rng(5);
  std::vector<int> hits(7, 0);
  double sum = 0.0, sq = 0.0;
  const int draws = 70000;
  for (int k = 0; k < draws; ++k) {
    const auto x = rng.UniformBelow(7);
    REQUIRE(x < 7);
    ++hits[x];
    const double u = rng.Uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double g = rng.Gaussian();
    sum += g;
    sq += g * g;
  }
  for (int h : hits) CHECK(std::abs(h - draws / 7) < 500);
  CHECK(std::abs(sum / draws) < 0.02);
  CHECK(std::abs(sq / draws - 1.0) < 0.03);
  CHECK(SubstreamSeed(1, 0) != SubstreamSeed(1, 1));
  CHECK(SubstreamSeed(1, 0, 1) != SubstreamSeed(1, 0, 2));
  CHECK(SubstreamSeed(3, 4, 5) == SubstreamSeed(3, 4, 5));
}

TEST_CASE("random instance golden output") {
  const UtilityProfile p = RandomInstance(5, 20261017);
  const Matrix agents = {{5, 1, 3, 2, 4}, {2, 3, 1, 4, 5}, {4, 3, 1, 2, 5}, {3, 4, 5, 1, 2}, {4, 1, 3, 5, 2}};
  const Matrix arms = {{1, 4, 2, 5, 3}, {2, 3, 4, 1, 5}, {4, 5, 2, 1, 3}, {4, 2, 5, 1, 3}, {1, 2, 4, 3, 5}};
  CHECK(p.agent_matrix() == agents);
  CHECK(p.arm_matrix() == arms);
  CHECK(RandomInstance(5, 20261017) == p);
}

TEST_CASE("random instance rows are uniform permutations") {
  std::map<std::vector<double>, int> freq;
  const int draws = 10000;
  for (int s = 1; s <= draws; ++s) {
    const UtilityProfile p = RandomInstance(3, static_cast<std::uint64_t>(s));
    for (const auto& row : p.agent_matrix()) {
      auto sorted = row;
      std::sort(sorted.begin(), sorted.end());
      REQUIRE(sorted == std::vector<double>{1, 2, 3});
    }
    ++freq[p.agent_matrix()[0]];
  }
  CHECK(freq.size() == 6);
  for (const auto& [row, count] : freq) {
    CHECK(std::abs(count / static_cast<double>(draws) - 1.0 / 6.0) <= 0.02);
  }
  CHECK_THROWS_AS(RandomInstance(0, 1), Error);
}

TEST_CASE("epoch schedule") {
  CHECK(CeilLog2(1) == 0);
  CHECK(CeilLog2(2) == 1);
  CHECK(CeilLog2(5) == 3);
  CHECK(CeilLog2(8) == 3);
  CHECK(CumulativeExplorationRounds(1) == 1);
  CHECK(CumulativeExplorationRounds(3) == 5);
  CHECK(CumulativeExplorationRounds(7) == 17);
  std::int64_t direct = 0;
  for (std::int64_t l = 1; l <= 20000; ++l) {
    std::int64_t ceil_log = 0;
    while ((std::int64_t{1} << ceil_log) < l + 1) ++ceil_log;
    direct += ceil_log;
    REQUIRE(CumulativeExplorationRounds(l) == direct);
  }
  const EpochPlan plan = PlanEpoch(3, 3);
  CHECK(plan.explore_rounds == 6);
  CHECK(plan.exploit_rounds == 8);
}

TEST_CASE("round robin assignment") {
  CHECK(RoundRobinAssignment(0, 3).agent_to_arm() == std::vector<int>{1, 2, 0});
  CHECK(RoundRobinAssignment(0, 1) == M({0}));
  CHECK(RoundRobinAssignment(17, 1) == M({0}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    for (std::int64_t t = 0; t < 2 * n; ++t) {
      const Matching m = RoundRobinAssignment(t, n);  // throws unless a permutation
      for (int i = 0; i < n; ++i) ++seen[i][m.arm_of(i)];
    }
    for (const auto& row : seen) {
      for (int c : row) CHECK(c == 2);
    }
  }
}

TEST_CASE("environment step") {
  const Environment quiet{Cyclic4(), 0.0};
  SplitMix64 rng(1);
  const std::vector<int> perm = {2, 3, 0, 1};
  const StepOutcome out = Step(quiet, perm, rng);
  for (int i = 0; i < 4; ++i) {
    CHECK(out.agent_rewards[i] == Cyclic4().agent_utility(i, perm[i]));
    CHECK(out.arm_rewards[perm[i]] == Cyclic4().arm_utility(perm[i], i));
    CHECK_FALSE(out.agent_conflicted[i]);
  }

  const std::vector<int> clash = {0, 0, 2, 3};
  const StepOutcome c = Step(quiet, clash, rng);
  CHECK(c.agent_rewards[0] == 0.0);
  CHECK(c.agent_rewards[1] == 0.0);
  CHECK(c.agent_conflicted[0]);
  CHECK(c.agent_conflicted[1]);
  CHECK(c.arm_rewards[0] == 0.0);
  CHECK(c.arm_puller[0] == -1);
  CHECK(c.arm_rewards[1] == 0.0);  // idle
  CHECK(c.agent_rewards[2] == 3.5);
  CHECK(c.arm_rewards[2] == 0.5);

  const std::vector<int> bad = {0, 7, 1, 2};
  CHECK_THROWS_AS(Step(quiet, bad, rng), Error);
}

TEST_CASE("noisy rewards average to the means") {
  const Environment env{Cyclic4(), 1.0};
  SplitMix64 rng(77);
  const std::vector<int> perm = {1, 2, 3, 0};
  double agent_sum = 0.0, arm_sum = 0.0;
  const int rounds = 40000;
  for (int k = 0; k < rounds; ++k) {
    const StepOutcome out = Step(env, perm, rng);
    agent_sum += out.agent_rewards[0];
    arm_sum += out.arm_rewards[1];
  }
  CHECK(agent_sum / rounds == doctest::Approx(2.5).epsilon(0.01));
  CHECK(arm_sum / rounds == doctest::Approx(1.7).epsilon(0.02));
}

TEST_CASE("estimator") {
  Estimator est(2);
  CHECK_THROWS_AS(est.EstimatedProfile(), Error);
  const Environment quiet{Swap2(), 0.0};
  SplitMix64 rng(3);
  for (const auto& perm : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
    est.Record(perm, Step(quiet, perm, rng));
  }
  CHECK(est.CountsUniform());
  CHECK(est.count(0, 1) == 1);
  CHECK(est.agent_mean(0, 1) == 1.1);
  CHECK(est.arm_mean(1, 0) == 0.4);
  CHECK(est.EstimatedProfile() == Swap2());
  const std::vector<int> clash = {0, 0};
  est.Record(clash, Step(quiet, clash, rng));
  CHECK(est.count(0, 0) == 1);
}

TEST_CASE("tie breaking keeps the lower index on top") {
  const UtilityProfile p = BreakTies({{1.0, 1.0, 0.5}, {2, 1, 0}, {0, 1, 2}},
                                     {{0, 0, 0}, {1, 2, 3}, {3, 2, 1}});
  CHECK(p.agent_utility(0, 0) == 1.0);
  CHECK(p.agent_utility(0, 1) < 1.0);
  CHECK(p.agent_utility(0, 1) > 0.5);
  CHECK(p.arm_prefers(0, 0, 1));
  CHECK(p.arm_prefers(0, 1, 2));
}

TEST_CASE("epoch ETC truncation") {
  const Environment env{Swap2(), 1.0};
  const SimulationTrace trace = RunEpochEtc(env, Objective::kUtilitarian, 3, 9);
  REQUIRE(trace.steps.size() == 3);
  CHECK(trace.steps[0].phase == Phase::kExplore);
  CHECK(trace.steps[1].phase == Phase::kExplore);
  CHECK(trace.steps.back().phase == Phase::kExploit);
  CHECK(trace.epochs.size() == 1);
  CHECK_THROWS_AS(RunEpochEtc(env, Objective::kUtilitarian, 1, 9), Error);
}

TEST_CASE("epoch ETC explores in round robin then commits") {
  const UtilityProfile truth = RandomInstance(4, 11);
  const SimulationTrace trace = RunEpochEtc({truth, 1.0}, Objective::kMaximin, 500, 1);
  for (const StepRecord& step : trace.steps) {
    if (step.phase == Phase::kExplore) {
      CHECK(step.assignment == RoundRobinAssignment(step.t, 4).agent_to_arm());
    }
    for (bool c : step.conflicted) CHECK_FALSE(c);
  }
  for (const EpochRecord& e : trace.epochs) {
    CHECK(e.samples_per_pair == CumulativeExplorationRounds(e.epoch));
    CHECK(trace.steps[e.commit_step - 1].assignment == e.committed.agent_to_arm());
  }
}

TEST_CASE("noise-free runs commit to the optimum from the first epoch") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const UtilityProfile truth = RandomInstance(5, seed);
    for (Objective obj : {Objective::kUtilitarian, Objective::kMaximin}) {
      const SimulationTrace trace = RunEpochEtc({truth, 0.0}, obj, 300, seed);
      const double best = NaiveBest(truth, obj == Objective::kMaximin);
      REQUIRE_FALSE(trace.epochs.empty());
      for (const EpochRecord& e : trace.epochs) {
        CHECK(NaiveStable(truth, e.committed.agent_to_arm()));
        CHECK(Welfare(truth, e.committed, obj) == best);
      }
    }
  }
}

TEST_CASE("cyclic market converges to the utilitarian optimum") {
  const UtilityProfile truth = Cyclic4();
  int hits = 0;
  for (int r = 0; r < 200; ++r) {
    const SimulationTrace trace =
        RunEpochEtc({truth, 1.0}, Objective::kUtilitarian, 1 << 15, SubstreamSeed(42, r));
    if (trace.FinalCommitted()->agent_to_arm() == kCyclic4Utilitarian) ++hits;
  }
  CHECK(hits >= 190);
}

TEST_CASE("regret increments") {
  const UtilityProfile truth = Cyclic4();
  // Round robin at time 0 plays the maximin matching.
  CHECK(UtilitarianShortfall(truth, 18.0, RoundRobinAssignment(0, 4).agent_to_arm()) == 1.0);
  CHECK(MaximinShortfall(truth, 1.7, kCyclic4Utilitarian) == doctest::Approx(0.2).epsilon(1e-12));
  const std::vector<int> clash = {0, 0, 2, 3};
  CHECK(MaximinShortfall(truth, 1.7, clash) == 1.7);
  CHECK(UtilitarianShortfall(truth, 18.0, clash) ==
        doctest::Approx(18.0 - (3.5 + 3.5 + 0.5 + 0.5)));
  CHECK_FALSE(AssignmentIsStable(truth, clash));
}

TEST_CASE("regret curves") {
  const UtilityProfile truth = Cyclic4();
  const SimulationTrace best = FixedTrace(truth, std::vector(5, kCyclic4Utilitarian));
  for (double x : UtilitarianRegretCurve(best, truth)) CHECK(x == 0.0);
  const SimulationTrace fair = FixedTrace(truth, std::vector(5, kCyclic4Maximin));
  for (double x : MaximinRegretCurve(fair, truth)) CHECK(x == 0.0);
  const auto cumulative = UtilitarianRegretCurve(fair, truth);
  CHECK(cumulative.back() == 5.0);

  CHECK_THROWS_AS(UtilitarianRegretCurve(best, Swap2()), Error);
}

TEST_CASE("regret depends only on the assignments") {
  const UtilityProfile truth = Cyclic4();
  const SimulationTrace a = RunEpochEtc({truth, 1.0}, Objective::kUtilitarian, 2000, 1);
  const SimulationTrace b = RunEpochEtc({truth, 1.0}, Objective::kUtilitarian, 2000, 2);
  std::vector<std::vector<int>> plays;
  for (const StepRecord& step : a.steps) plays.push_back(step.assignment);
  CHECK(UtilitarianRegretCurve(a, truth) == UtilitarianRegretCurve(FixedTrace(truth, plays), truth));
  CHECK(MaximinRegretCurve(a, truth) == MaximinRegretCurve(FixedTrace(truth, plays), truth));

  size_t shared = 0;
  while (shared < a.steps.size() && a.steps[shared].assignment == b.steps[shared].assignment) ++shared;
  REQUIRE(shared >= 4);
  const auto ca = UtilitarianRegretCurve(a, truth), cb = UtilitarianRegretCurve(b, truth);
  for (size_t k = 0; k < shared; ++k) CHECK(ca[k] == cb[k]);
}

TEST_CASE("stability indicator") {
  const UtilityProfile truth = Cyclic4();
  std::vector<std::vector<int>> steps;
  for (std::int64_t t = 0; t < 8; ++t) steps.push_back(RoundRobinAssignment(t, 4).agent_to_arm());
  steps.push_back({0, 1, 3, 2});
  const auto curve = StabilityIndicatorCurve(FixedTrace(truth, steps), truth);
  for (size_t k = 0; k < steps.size(); ++k) CHECK(curve[k] == (NaiveStable(truth, steps[k]) ? 1 : 0));
  CHECK(curve.back() == 0);

  // The corrupted swap-market commit is suboptimal but still stable.
  const Matching chosen = SelectMatching(Swap2Estimated(), Objective::kUtilitarian);
  CHECK(chosen == M({1, 0}));
  const SimulationTrace commit = FixedTrace(Swap2(), {chosen.agent_to_arm()});
  CHECK(StabilityIndicatorCurve(commit, Swap2()).front() == 1);
  CHECK(UtilitarianRegretCurve(commit, Swap2()).front() == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("trace rows follow the stride") {
  const UtilityProfile truth = Cyclic4();
  const SimulationTrace trace = RunEpochEtc({truth, 1.0}, Objective::kUtilitarian, 10, 4);
  CHECK(TraceRows(trace, truth, 1).size() == 10);
  const auto thinned = TraceRows(trace, truth, 4);
  REQUIRE(thinned.size() == 3);
  CHECK(thinned[0].t == 4);
  CHECK(thinned[1].t == 8);
  CHECK(thinned[2].t == 10);
}

TEST_CASE("sample complexity") {
  const double util = 2.0 * 16 / (0.0625 * 0.0625) * std::log(4.0 * 16 / 0.05);
  const double fair = 8.0 * 16 / (0.1 * 0.1) * std::log(4.0 * 16 / 0.05);
  CHECK(SampleComplexity(4, 0.0625, 0.05, Objective::kUtilitarian) == 58611);
  CHECK(static_cast<std::int64_t>(std::ceil(util)) == 58611);
  CHECK(SampleComplexity(4, 0.1, 0.05, Objective::kMaximin) == 91580);
  CHECK(static_cast<std::int64_t>(std::ceil(fair)) == 91580);
  CHECK(SampleComplexity(4, 0.125, 0.05, Objective::kUtilitarian) ==
        static_cast<std::int64_t>(std::ceil(util / 4.0)));
  CHECK_THROWS_AS(SampleComplexity(4, 0.0, 0.05, Objective::kUtilitarian), Error);
  CHECK_THROWS_AS(SampleComplexity(4, 0.1, 1.0, Objective::kUtilitarian), Error);
  CHECK_THROWS_AS(SampleComplexity(4, INFINITY, 0.05, Objective::kMaximin), Error);
}

TEST_CASE("batch runs are independent of thread count") {
  BatchConfig config;
  config.n = 4;
  config.horizon = 3000;
  config.replications = 6;
  config.seed = 12;
  config.stride = 100;
  config.threads = 1;
  const BatchResult serial = RunBatch(config);
  config.threads = 3;
  const BatchResult parallel = RunBatch(config);
  REQUIRE(serial.summary.size() == parallel.summary.size());
  for (size_t k = 0; k < serial.summary.size(); ++k) {
    CHECK(serial.summary[k].util_mean == parallel.summary[k].util_mean);
    CHECK(serial.summary[k].stable_hi == parallel.summary[k].stable_hi);
  }
  for (int r = 0; r < 6; ++r) {
    CHECK(serial.replications[r].truth == parallel.replications[r].truth);
    CHECK(serial.replications[r].truth == RandomInstance(4, SubstreamSeed(12, r, kInstanceStream)));
  }
  CHECK(serial.summary.back().t == 3000);
}

TEST_CASE("batch summary intervals") {
  std::vector<ReplicationResult> reps(3);
  const double util[] = {1.0, 2.0, 6.0};
  for (int r = 0; r < 3; ++r) reps[r].rows = {{5, 1, Phase::kExploit, util[r], 0.0, r == 0}};
  const auto rows = Summarize(reps);
  REQUIRE(rows.size() == 1);
  // mean 3, sample sd sqrt(7)
  const double half = 1.96 * std::sqrt(7.0) / std::sqrt(3.0);
  CHECK(rows[0].util_mean == doctest::Approx(3.0));
  CHECK(rows[0].util_lo == doctest::Approx(3.0 - half));
  CHECK(rows[0].util_hi == doctest::Approx(3.0 + half));
  CHECK(rows[0].maximin_lo == 0.0);
  CHECK(rows[0].stable_mean == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("batch configuration errors") {
  BatchConfig config;
  config.replications = 0;
  CHECK_THROWS_AS(RunBatch(config), Error);
  config = {};
  config.stride = 0;
  CHECK_THROWS_AS(RunBatch(config), Error);
  config = {};
  config.horizon = 2;
  CHECK_THROWS_AS(RunBatch(config), Error);
  config = {};
  config.tail_fraction = 0.0;
  CHECK_THROWS_AS(RunBatch(config), Error);
}
