#include "stablewelfare/trace_csv.h"

#include <charconv>
#include <fstream>

#include "stablewelfare/error.h"

namespace stablewelfare {
namespace {

template <typename Writer>
void WriteFile(const std::string& path, Writer&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  write(out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace

std::string FormatNumber(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

void WriteTraceCsv(std::ostream& out, const std::vector<TraceRow>& rows) {
  out << kTraceHeader << '\n';
  for (const TraceRow& row : rows) {
    out << std::to_string(row.t) << ',' << std::to_string(row.epoch) << ',' << ToString(row.phase) << ','
        << FormatNumber(row.util_regret) << ',' << FormatNumber(row.maximin_regret)
        << ',' << (row.stable ? '1' : '0') << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const SummaryRow& row : rows) {
    out << std::to_string(row.t);
    for (double v : {row.util_mean, row.util_lo, row.util_hi, row.maximin_mean,
                     row.maximin_lo, row.maximin_hi, row.stable_mean,
                     row.stable_lo, row.stable_hi}) {
      out << ',' << FormatNumber(v);
    }
    out << '\n';
  }
}

void WriteTraceCsv(const std::string& path, const std::vector<TraceRow>& rows) {
  WriteFile(path, [&](std::ostream& out) { WriteTraceCsv(out, rows); });
}

void WriteSummaryCsv(const std::string& path, const std::vector<SummaryRow>& rows) {
  WriteFile(path, [&](std::ostream& out) { WriteSummaryCsv(out, rows); });
}

}  // namespace stablewelfare
