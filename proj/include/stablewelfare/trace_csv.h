#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "stablewelfare/batch.h"
#include "stablewelfare/metrics.h"

namespace stablewelfare {

inline constexpr const char* kTraceHeader =
    "time,epoch,phase,util_regret,maximin_regret,stable";
inline constexpr const char* kSummaryHeader =
    "time,util_mean,util_lo,util_hi,maximin_mean,maximin_lo,maximin_hi,"
    "stable_mean,stable_lo,stable_hi";

// Shortest round-trip decimal with '.' as separator, whatever the locale.
std::string FormatNumber(double value);

void WriteTraceCsv(std::ostream& out, const std::vector<TraceRow>& rows);
void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows);

// File variants; throw Error(kIoError).
void WriteTraceCsv(const std::string& path, const std::vector<TraceRow>& rows);
void WriteSummaryCsv(const std::string& path, const std::vector<SummaryRow>& rows);

}  // namespace stablewelfare
