#include "cli.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "stablewelfare/batch.h"
#include "stablewelfare/deferred_acceptance.h"
#include "stablewelfare/gaps.h"
#include "stablewelfare/instance_gen.h"
#include "stablewelfare/instance_io.h"
#include "stablewelfare/maximin.h"
#include "stablewelfare/oracle.h"
#include "stablewelfare/sample_complexity.h"
#include "stablewelfare/stability.h"
#include "stablewelfare/trace_csv.h"
#include "stablewelfare/utilitarian.h"

namespace stablewelfare::cli {
namespace {

// Twelve significant digits, always with a decimal point for finite values.
std::string Display(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value == 0.0 ? 0.0 : value,
                                 std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void PrintMatching(std::ostream& out, const UtilityProfile& profile,
                   const Matching& m) {
  out << m.ToLines();
  out << "permutation: " << m.ToPermutationString() << '\n';
  out << "utilitarian_welfare: " << Display(UtilitarianWelfare(profile, m)) << '\n';
  out << "maximin_welfare: " << Display(MaximinWelfare(profile, m)) << '\n';
}

Objective ObjectiveFromName(const std::string& name) {
  return name == "maximin" || name == "maximin-etc" ? Objective::kMaximin
                                                    : Objective::kUtilitarian;
}

struct Options {
  std::string instance;
  std::string out;
  std::string objective = "utilitarian";
  std::string algo = "utilitarian-etc";
  int n = 5;
  std::uint64_t seed = 0;
  int cap = kDefaultOracleCap;
  double alpha = 0.05;
  std::int64_t horizon = 1 << 16;
  int replications = 200;
  std::int64_t stride = 1;
  int threads = 0;
  double noise_sd = 1.0;
  bool no_traces = false;
};

int Gen(const Options& o, std::ostream& out) {
  const UtilityProfile profile = RandomInstance(o.n, o.seed);
  if (o.out.empty()) {
    out << SerializeInstance(profile);
  } else {
    WriteInstance(profile, o.out);
  }
  return kExitOk;
}

int Solve(const Options& o, std::ostream& out) {
  const UtilityProfile profile = ReadInstance(o.instance);
  Matching m;
  if (o.objective == "agent-opt") {
    m = DeferredAcceptance(profile, Side::kAgents);
  } else if (o.objective == "arm-opt") {
    m = DeferredAcceptance(profile, Side::kArms);
  } else if (o.objective == "utilitarian") {
    m = UtilitarianOptimal(profile);
  } else {
    m = MaximinOptimal(profile);
  }
  out << "objective: " << o.objective << '\n';
  PrintMatching(out, profile, m);
  return kExitOk;
}

int Enumerate(const Options& o, std::ostream& out) {
  const UtilityProfile profile = ReadInstance(o.instance);
  const StableSet set = EnumerateStableMatchings(profile, o.cap);
  out << "stable_matchings: " << set.entries.size() << '\n';
  for (size_t k = 0; k < set.entries.size(); ++k) {
    const StableEntry& e = set.entries[k];
    out << "\n# " << k << " utilitarian=" << Display(e.utilitarian)
        << " maximin=" << Display(e.maximin) << '\n';
    out << e.matching.ToLines();
    out << "permutation: " << e.matching.ToPermutationString() << '\n';
  }
  return kExitOk;
}

int Gaps(const Options& o, std::ostream& out) {
  const UtilityProfile profile = ReadInstance(o.instance);
  const GapReport g = PreferenceGaps(profile, WelfareGapMode::kIfFeasible, o.cap);
  out << "delta_a: " << Display(g.delta_a) << '\n';
  out << "delta_b: " << Display(g.delta_b) << '\n';
  out << "gamma_a: " << Display(g.gamma_a) << '\n';
  out << "gamma_b: " << Display(g.gamma_b) << '\n';
  out << "gamma: " << Display(g.gamma) << '\n';
  out << "welfare_gap: " << (g.delta_welfare ? Display(*g.delta_welfare) : "n/a") << '\n';
  out << "beta: " << (g.beta ? Display(*g.beta) : "n/a") << '\n';
  return kExitOk;
}

int Samples(const Options& o, std::ostream& out) {
  const UtilityProfile profile = ReadInstance(o.instance);
  const Objective objective = ObjectiveFromName(o.objective);
  double gap;
  if (objective == Objective::kUtilitarian) {
    const GapReport g = PreferenceGaps(profile, WelfareGapMode::kRequired, o.cap);
    gap = *g.beta;
    out << "gap_beta: " << Display(gap) << '\n';
  } else {
    gap = PreferenceGaps(profile, WelfareGapMode::kSkip).gamma;
    out << "gap_gamma: " << Display(gap) << '\n';
  }
  out << "samples: " << SampleComplexity(profile.n(), gap, o.alpha, objective) << '\n';
  return kExitOk;
}

int Simulate(const Options& o, std::ostream& out) {
  BatchConfig config;
  if (!o.instance.empty()) config.instance = ReadInstance(o.instance);
  config.n = o.n;
  config.algorithm = ObjectiveFromName(o.algo);
  config.horizon = o.horizon;
  config.replications = o.replications;
  config.seed = o.seed;
  config.stride = o.stride;
  config.noise_sd = o.noise_sd;
  config.threads = o.threads;
  const BatchResult result = RunBatch(config);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + o.out);
  WriteSummaryCsv((fs::path(o.out) / "summary.csv").string(), result.summary);
  if (!o.no_traces) {
    for (size_t r = 0; r < result.replications.size(); ++r) {
      WriteTraceCsv((fs::path(o.out) / ("trace_" + std::to_string(r) + ".csv")).string(),
                    result.replications[r].rows);
    }
  }

  double tail_util = 0, tail_maximin = 0, tail_stable = 0, optimal = 0;
  for (const ReplicationResult& rep : result.replications) {
    tail_util += rep.tail_util_per_step;
    tail_maximin += rep.tail_maximin_per_step;
    tail_stable += rep.tail_stability;
    optimal += rep.final_commit_optimal ? 1.0 : 0.0;
  }
  const double count = static_cast<double>(result.replications.size());
  out << "replications: " << result.replications.size() << '\n';
  out << "tail_util_regret_per_step: " << Display(tail_util / count) << '\n';
  out << "tail_maximin_regret_per_step: " << Display(tail_maximin / count) << '\n';
  out << "tail_stability: " << Display(tail_stable / count) << '\n';
  out << "final_commit_optimal: " << Display(optimal / count) << '\n';
  out << "output: " << o.out << '\n';
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
      return kExitBadInput;
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kNegativeUtility:
    case ErrorCode::kTiedUtilities:
    case ErrorCode::kNonFinite:
    case ErrorCode::kHorizonTooSmall:
    case ErrorCode::kInvalidGap:
    case ErrorCode::kInvalidAlpha:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kPreconditionViolated:
    case ErrorCode::kUnstableInput:
    case ErrorCode::kTruthMismatch:
      return kExitInvalid;
    case ErrorCode::kOracleTooLarge:
      return kExitTooLarge;
    default:
      return kExitInternal;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stable matchings with welfare objectives, and bandit learning of them"};
  app.require_subcommand(1);
  Options o;
  o.cap = OracleCapFromEnvironment();

  auto* gen = app.add_subcommand("gen", "Draw a random integer-utility instance");
  gen->add_option("--n", o.n, "Market size")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--out", o.out, "Output file (stdout if omitted)");

  auto* solve = app.add_subcommand("solve", "Compute one stable matching");
  solve->add_option("--instance", o.instance, "Instance file")->required();
  solve->add_option("--objective", o.objective, "Which stable matching")
      ->check(CLI::IsMember({"agent-opt", "arm-opt", "utilitarian", "maximin"}));

  auto* enumerate = app.add_subcommand("enumerate", "List every stable matching (brute force)");
  enumerate->add_option("--instance", o.instance, "Instance file")->required();
  enumerate->add_option("--cap", o.cap, "Largest n the brute force accepts");

  auto* gaps = app.add_subcommand("gaps", "Preference and welfare gaps");
  gaps->add_option("--instance", o.instance, "Instance file")->required();
  gaps->add_option("--cap", o.cap, "Largest n for the welfare gap");

  auto* samples = app.add_subcommand("sample-complexity",
                                     "Exploration samples for a 1 - alpha guarantee");
  samples->add_option("--instance", o.instance, "Instance file")->required();
  samples->add_option("--alpha", o.alpha, "Failure probability");
  samples->add_option("--objective", o.objective, "utilitarian or maximin")
      ->check(CLI::IsMember({"utilitarian", "maximin"}));
  samples->add_option("--cap", o.cap, "Largest n for the welfare gap");

  auto* simulate = app.add_subcommand("simulate", "Epoch explore-then-commit experiments");
  auto* instance_opt = simulate->add_option("--instance", o.instance,
                                            "Fixed instance file for every replication");
  simulate->add_option("--n", o.n, "Random instance size per replication")
      ->check(CLI::PositiveNumber)
      ->excludes(instance_opt);
  simulate->add_option("--algo", o.algo, "utilitarian-etc or maximin-etc")
      ->check(CLI::IsMember({"utilitarian-etc", "maximin-etc"}));
  simulate->add_option("--horizon", o.horizon, "Steps per replication");
  simulate->add_option("--replications", o.replications, "Independent runs");
  simulate->add_option("--seed", o.seed, "Base seed");
  simulate->add_option("--stride", o.stride, "Record every k-th step");
  simulate->add_option("--noise-sd", o.noise_sd, "Reward noise standard deviation");
  simulate->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  simulate->add_option("--out", o.out, "Output directory")->required();
  simulate->add_flag("--no-traces", o.no_traces, "Write only summary.csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* failing = &app;
    for (CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return Gen(o, out);
    if (solve->parsed()) return Solve(o, out);
    if (enumerate->parsed()) return Enumerate(o, out);
    if (gaps->parsed()) return Gaps(o, out);
    if (samples->parsed()) return Samples(o, out);
    return Simulate(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace stablewelfare::cli
