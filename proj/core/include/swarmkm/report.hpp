#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "swarmkm/runner.hpp"

namespace swarmkm {

enum class ReportFormat { kJson, kCsv };

ReportFormat parse_report_format(std::string_view name);

inline constexpr const char* kRecordCsvHeader =
    "initializer,seed,iterations,converged,inertia,init_ms,lloyd_ms";

/// Canonical JSON (sorted keys, two-space indent, trailing newline).
std::string bench_json(const BenchReport& report);
std::string run_json(const RunOutcome& outcome);

std::string records_csv(std::span<const RunRecord> records);
/// Parses text produced by records_csv. Throws DataError on malformed input.
std::vector<RunRecord> parse_records_csv(std::istream& in);

/// Sibling trace file name: `<path>.trace.<initializer>.<seed>.csv`.
std::filesystem::path trace_path(const std::filesystem::path& report_path,
                                 Initializer initializer, std::uint64_t seed);

/// `step,value` rows.
std::string trace_csv(std::span<const double> values);

/// Writes the report to `path` plus one Lloyd inertia trace per record.
/// Throws ConfigError if a file cannot be written.
void emit_report(const BenchReport& report, ReportFormat format,
                 const std::filesystem::path& path);
void emit_run(const RunOutcome& outcome, ReportFormat format, const std::filesystem::path& path);

/// Report body without side files, for standard output.
std::string render_report(const BenchReport& report, ReportFormat format);
std::string render_run(const RunOutcome& outcome, ReportFormat format);

}  // namespace swarmkm
