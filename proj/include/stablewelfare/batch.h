#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stablewelfare/metrics.h"
#include "stablewelfare/oracle.h"
#include "stablewelfare/profile.h"

namespace stablewelfare {

struct BatchConfig {
  // Fixed truth for every replication; when empty each replication draws
  // RandomInstance(n, ...) from its own substream.
  std::optional<UtilityProfile> instance;
  int n = 5;
  Objective algorithm = Objective::kUtilitarian;
  std::int64_t horizon = 1 << 16;
  int replications = 200;
  std::uint64_t seed = 0;
  std::int64_t stride = 1;
  double noise_sd = 1.0;
  // Share of final steps summarised in ReplicationResult::tail_*.
  double tail_fraction = 0.1;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

// Throws Error(kInvalidArgument) for replications < 1, stride < 1, a tail
// fraction outside (0, 1], or horizon < n.
void ValidateBatchConfig(const BatchConfig& config);

struct ReplicationResult {
  UtilityProfile truth;
  std::vector<TraceRow> rows;          // stride-thinned
  double first_util_shortfall = 0.0;   // regret increment at t = 1
  double first_maximin_shortfall = 0.0;
  double tail_util_per_step = 0.0;     // mean increment over the tail
  double tail_maximin_per_step = 0.0;
  double tail_stability = 0.0;         // mean indicator over the tail
  // Last committed matching is stable under truth and attains the optimal
  // value of the algorithm's objective.
  bool final_commit_optimal = false;
};

struct SummaryRow {
  std::int64_t t = 0;
  double util_mean = 0, util_lo = 0, util_hi = 0;
  double maximin_mean = 0, maximin_lo = 0, maximin_hi = 0;
  double stable_mean = 0, stable_lo = 0, stable_hi = 0;
};

struct BatchResult {
  std::vector<ReplicationResult> replications;  // by replication index
  std::vector<SummaryRow> summary;
};

inline constexpr std::uint64_t kInstanceStream = 1;
inline constexpr std::uint64_t kNoiseStream = 2;

// One replication; depends only on (config, index).
ReplicationResult RunReplication(const BatchConfig& config, int index);

// Runs every replication (concurrently when threads allow) and aggregates
// mean +- 1.96 * sd / sqrt(replications) per recorded time point. Output is
// independent of scheduling.
BatchResult RunBatch(const BatchConfig& config);

std::vector<SummaryRow> Summarize(const std::vector<ReplicationResult>& reps);

}  // namespace stablewelfare
