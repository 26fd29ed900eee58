#include "swarmkm/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "swarmkm/errors.hpp"
#include "swarmkm/version.hpp"

namespace swarmkm {
namespace {

using nlohmann::json;

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

json points_json(const PointSet& points) {
  json rows = json::array();
  for (std::size_t i = 0; i < points.rows(); ++i) {
    const auto row = points.row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

// Thread counts are omitted: they never change results.
json spec_json(const RunSpec& spec) {
  json data;
  if (const auto* csv = std::get_if<CsvSource>(&spec.source)) {
    data["type"] = "csv";
    data["path"] = csv->path.string();
    data["label_column"] = csv->label_column ? json(*csv->label_column) : json(nullptr);
  } else {
    const auto& blobs = std::get<BlobSource>(spec.source);
    const Bounds box = blobs.spec.resolved_box();
    data["type"] = "blobs";
    data["k"] = blobs.spec.k;
    data["n_per"] = blobs.spec.n_per;
    data["d"] = blobs.spec.d;
    data["spread"] = blobs.spec.spread;
    data["box"] = {{"lower", box.lower}, {"upper", box.upper}};
    data["seed"] = blobs.seed ? json(*blobs.seed) : json(nullptr);
  }

  const auto& p = spec.pso;
  return json{
      {"data", data},
      {"k", spec.kmeans.k},
      {"initializer", std::string(to_string(spec.initializer))},
      {"seed", spec.seed},
      {"timings", spec.timings},
      {"data_seeds", spec.data_seeds ? json(*spec.data_seeds) : json(nullptr)},
      {"kmeans", {{"tol", spec.kmeans.tol}, {"max_iter", spec.kmeans.max_iter},
                  {"seed", spec.kmeans.seed}}},
      {"pso", {{"population", p.population}, {"c1", p.c1}, {"c2", p.c2},
               {"w", p.inertia_weight}, {"max_iter", p.max_iter}, {"stall_tol", p.stall_tol},
               {"stall_patience", p.stall_patience}, {"vmax_fraction", p.vmax_fraction},
               {"seed", p.seed}}},
      {"sample", {{"fraction", spec.sample.fraction}, {"seed", spec.sample.seed}}},
  };
}

json record_json(const RunOutcome& run) {
  const auto& r = run.record;
  json out{
      {"initializer", std::string(to_string(r.initializer))},
      {"seed", r.seed},
      {"iterations", r.iterations},
      {"converged", r.converged},
      {"inertia", r.inertia},
      {"init_ms", r.init_ms},
      {"lloyd_ms", r.lloyd_ms},
      {"inertia_trace", run.result.inertia_trace},
  };
  if (r.initializer == Initializer::kPso) {
    out["pso_fitness_evals"] = r.pso_fitness_evals;
    out["gbest_fitness"] = run.gbest_fitness;
    out["gbest_trace"] = run.gbest_trace;
  }
  return out;
}

json aggregate_json(const Aggregate& a) {
  return json{
      {"initializer", std::string(to_string(a.initializer))},
      {"runs", a.runs},
      {"median_iterations", a.median_iterations},
      {"mean_iterations", a.mean_iterations},
      {"median_inertia", a.median_inertia},
      {"mean_inertia", a.mean_inertia},
      {"iteration_ratio_vs_random",
       a.iteration_ratio_vs_random ? json(*a.iteration_ratio_vs_random) : json(nullptr)},
  };
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError(path.string() + ": cannot open file for writing");
  file << content;
  file.close();
  if (!file) throw ConfigError(path.string() + ": write failed");
}

template <typename T>
T parse_number(std::string_view cell, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw DataError("record CSV line " + std::to_string(line) + ": bad number '" +
                    std::string(cell) + "'");
  }
  return value;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw ConfigError("unknown report format '" + std::string(name) + "' (expected json or csv)");
}

std::string bench_json(const BenchReport& report) {
  json config = spec_json(report.spec);
  config.erase("initializer");
  json inits = json::array();
  for (const auto init : report.initializers) inits.push_back(std::string(to_string(init)));
  config["initializers"] = inits;
  config["repeats"] = report.repeats;

  json records = json::array();
  for (const auto& run : report.runs) records.push_back(record_json(run));
  json aggregates = json::array();
  for (const auto& agg : report.aggregates) aggregates.push_back(aggregate_json(agg));

  const json doc{{"version", kVersion},
                 {"config", config},
                 {"records", records},
                 {"aggregates", aggregates}};
  return doc.dump(2) + "\n";
}

std::string run_json(const RunOutcome& outcome) {
  json result = record_json(outcome);
  result["initial_centroids"] = points_json(outcome.initial_centroids);
  result["centroids"] = points_json(outcome.result.centroids);
  result["assignments"] = outcome.result.assignments;
  const json doc{{"version", kVersion}, {"config", spec_json(outcome.spec)}, {"result", result}};
  return doc.dump(2) + "\n";
}

std::string records_csv(std::span<const RunRecord> records) {
  std::string out = std::string(kRecordCsvHeader) + "\n";
  for (const auto& r : records) {
    out += std::string(to_string(r.initializer)) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.iterations) + ',' + (r.converged ? "true" : "false") + ',' +
           format_real(r.inertia) + ',' + format_real(r.init_ms) + ',' + format_real(r.lloyd_ms) +
           '\n';
  }
  return out;
}

std::vector<RunRecord> parse_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRecordCsvHeader) {
    throw DataError("record CSV: missing or unexpected header");
  }
  std::vector<RunRecord> records;
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest(line);
    for (auto comma = rest.find(','); comma != std::string_view::npos; comma = rest.find(',')) {
      cells.push_back(rest.substr(0, comma));
      rest.remove_prefix(comma + 1);
    }
    cells.push_back(rest);
    if (cells.size() != 7) {
      throw DataError("record CSV line " + std::to_string(line_no) + ": expected 7 fields");
    }
    RunRecord r;
    try {
      r.initializer = parse_initializer(cells[0]);
    } catch (const ConfigError& e) {
      throw DataError("record CSV line " + std::to_string(line_no) + ": " + e.what());
    }
    r.seed = parse_number<std::uint64_t>(cells[1], line_no);
    r.iterations = parse_number<std::size_t>(cells[2], line_no);
    if (cells[3] != "true" && cells[3] != "false") {
      throw DataError("record CSV line " + std::to_string(line_no) + ": bad converged flag");
    }
    r.converged = cells[3] == "true";
    r.inertia = parse_number<double>(cells[4], line_no);
    r.init_ms = parse_number<double>(cells[5], line_no);
    r.lloyd_ms = parse_number<double>(cells[6], line_no);
    records.push_back(r);
  }
  return records;
}

std::filesystem::path trace_path(const std::filesystem::path& report_path, Initializer initializer,
                                 std::uint64_t seed) {
  return report_path.string() + ".trace." + std::string(to_string(initializer)) + "." +
         std::to_string(seed) + ".csv";
}

std::string trace_csv(std::span<const double> values) {
  std::string out = "step,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_real(values[i]) + '\n';
  }
  return out;
}

std::string render_report(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return bench_json(report);
  return records_csv(records_of(report));
}

std::string render_run(const RunOutcome& outcome, ReportFormat format) {
  if (format == ReportFormat::kJson) return run_json(outcome);
  return records_csv(std::span<const RunRecord>(&outcome.record, 1));
}

void emit_report(const BenchReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  write_file(path, render_report(report, format));
  for (const auto& run : report.runs) {
    write_file(trace_path(path, run.record.initializer, run.record.seed),
               trace_csv(run.result.inertia_trace));
  }
}

void emit_run(const RunOutcome& outcome, ReportFormat format, const std::filesystem::path& path) {
  write_file(path, render_run(outcome, format));
  write_file(trace_path(path, outcome.record.initializer, outcome.record.seed),
             trace_csv(outcome.result.inertia_trace));
}

}  // namespace swarmkm
