#include "stablewelfare/batch.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "stablewelfare/epoch_etc.h"
#include "stablewelfare/error.h"
#include "stablewelfare/instance_gen.h"
#include "stablewelfare/maximin.h"
#include "stablewelfare/random.h"
#include "stablewelfare/stability.h"
#include "stablewelfare/utilitarian.h"

namespace stablewelfare {
namespace {

struct Interval {
  double mean, lo, hi;
};

Interval NormalInterval(const std::vector<double>& xs) {
  const double count = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / count;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(ss / (count - 1.0)) : 0.0;
  const double half = 1.96 * sd / std::sqrt(count);
  return {mean, mean - half, mean + half};
}

}  // namespace

void ValidateBatchConfig(const BatchConfig& config) {
  const int n = config.instance ? config.instance->n() : config.n;
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (config.replications < 1) {
    throw Error(ErrorCode::kInvalidArgument, "replications must be >= 1");
  }
  if (config.stride < 1) throw Error(ErrorCode::kInvalidArgument, "stride must be >= 1");
  if (!(config.tail_fraction > 0.0 && config.tail_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tail fraction must lie in (0, 1]");
  }
  if (config.horizon < n) {
    throw Error(ErrorCode::kHorizonTooSmall, "horizon must be at least n");
  }
  if (!(config.noise_sd >= 0.0) || !std::isfinite(config.noise_sd)) {
    throw Error(ErrorCode::kInvalidArgument, "noise sd must be finite and >= 0");
  }
}

ReplicationResult RunReplication(const BatchConfig& config, int index) {
  ReplicationResult out;
  out.truth = config.instance
                  ? *config.instance
                  : RandomInstance(config.n, SubstreamSeed(config.seed, index,
                                                           kInstanceStream));
  const Environment env{out.truth, config.noise_sd};
  const SimulationTrace trace =
      RunEpochEtc(env, config.algorithm, config.horizon,
                  SubstreamSeed(config.seed, index, kNoiseStream));

  const auto util = UtilitarianRegretCurve(trace, out.truth);
  const auto maximin = MaximinRegretCurve(trace, out.truth);
  const auto stable = StabilityIndicatorCurve(trace, out.truth);
  const size_t steps = trace.steps.size();

  out.first_util_shortfall = util.front();
  out.first_maximin_shortfall = maximin.front();
  const size_t tail = std::max<size_t>(
      1, static_cast<size_t>(std::llround(config.tail_fraction * static_cast<double>(steps))));
  const size_t start = steps - tail;  // tail covers steps start+1 .. steps
  const double before_util = start == 0 ? 0.0 : util[start - 1];
  const double before_maximin = start == 0 ? 0.0 : maximin[start - 1];
  out.tail_util_per_step = (util.back() - before_util) / static_cast<double>(tail);
  out.tail_maximin_per_step =
      (maximin.back() - before_maximin) / static_cast<double>(tail);
  double stable_sum = 0.0;
  for (size_t k = start; k < steps; ++k) stable_sum += stable[k];
  out.tail_stability = stable_sum / static_cast<double>(tail);

  if (const Matching* final_commit = trace.FinalCommitted()) {
    const Matching best = config.algorithm == Objective::kUtilitarian
                              ? UtilitarianOptimal(out.truth)
                              : MaximinOptimal(out.truth);
    const double optimum = Welfare(out.truth, best, config.algorithm);
    out.final_commit_optimal =
        IsStable(out.truth, *final_commit) &&
        Welfare(out.truth, *final_commit, config.algorithm) == optimum;
  }

  for (size_t k = 0; k < steps; ++k) {
    const auto& step = trace.steps[k];
    if (step.t % config.stride != 0 && k + 1 != steps) continue;
    out.rows.push_back(
        {step.t, step.epoch, step.phase, util[k], maximin[k], stable[k]});
  }
  return out;
}

BatchResult RunBatch(const BatchConfig& config) {
  ValidateBatchConfig(config);
  BatchResult result;
  result.replications.resize(static_cast<size_t>(config.replications));

  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, config.replications);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < config.replications; i = next++) {
      try {
        result.replications[i] = RunReplication(config, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = Summarize(result.replications);
  return result;
}

std::vector<SummaryRow> Summarize(const std::vector<ReplicationResult>& reps) {
  std::vector<SummaryRow> out;
  if (reps.empty()) return out;
  const size_t points = reps.front().rows.size();
  std::vector<double> util(reps.size()), maximin(reps.size()), stable(reps.size());
  for (size_t p = 0; p < points; ++p) {
    for (size_t r = 0; r < reps.size(); ++r) {
      const TraceRow& row = reps[r].rows.at(p);
      util[r] = row.util_regret;
      maximin[r] = row.maximin_regret;
      stable[r] = row.stable;
    }
    const Interval u = NormalInterval(util);
    const Interval m = NormalInterval(maximin);
    const Interval s = NormalInterval(stable);
    out.push_back({reps.front().rows[p].t, u.mean, u.lo, u.hi, m.mean, m.lo,
                   m.hi, s.mean, s.lo, s.hi});
  }
  return out;
}

}  // namespace stablewelfare
