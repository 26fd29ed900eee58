// swarmkm: cluster a data set, benchmark initializers, or generate blobs.
//
//   swarmkm run   --blobs k=4,n=38,d=4,spread=0.3 --init pso --seed 7
//   swarmkm bench --data data/iris.csv --label-column 4 --inits random,pso --repeats 30
//   swarmkm gen-blobs --k 4 --n-per 38 --d 4 --spread 0.3 --seed 1 --out blobs.csv
//
// Exit codes: 0 success, 1 usage or configuration error, 2 data error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swarmkm/dataset.hpp"
#include "swarmkm/errors.hpp"
#include "swarmkm/report.hpp"
#include "swarmkm/runner.hpp"
#include "swarmkm/version.hpp"

namespace {

using namespace swarmkm;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct CommonOptions {
  std::string data_path;
  std::optional<std::size_t> label_column;
  std::string blobs;
  std::size_t k = 4;
  std::string init = "random";
  std::uint64_t seed = 0;
  KMeansConfig kmeans;
  pso::PsoConfig pso;
  double sample_fraction = 1.0;
  std::optional<std::size_t> data_seeds;
  std::string out;
  std::string format = "json";
  bool timings = false;
  std::size_t threads = 1;
};

// Parses "k=4,n=38,d=4,spread=0.3[,seed=S][,lo=L,hi=H]"; omitted keys keep
// their defaults.
BlobSource parse_blob_source(const std::string& text) {
  BlobSource source;
  std::optional<double> lo;
  std::optional<double> hi;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--blobs: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "k") {
        source.spec.k = std::stoul(value);
      } else if (key == "n") {
        source.spec.n_per = std::stoul(value);
      } else if (key == "d") {
        source.spec.d = std::stoul(value);
      } else if (key == "spread") {
        source.spec.spread = std::stod(value);
      } else if (key == "seed") {
        source.seed = std::stoull(value);
      } else if (key == "lo") {
        lo = std::stod(value);
      } else if (key == "hi") {
        hi = std::stod(value);
      } else {
        throw ConfigError("--blobs: unknown key '" + key + "'");
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ConfigError*>(&e)) throw;
      throw ConfigError("--blobs: bad value for '" + key + "': '" + value + "'");
    }
  }
  if (lo || hi) {
    source.spec.box = Bounds{std::vector<double>(source.spec.d, lo.value_or(0.0)),
                             std::vector<double>(source.spec.d, hi.value_or(10.0))};
  }
  return source;
}

void add_common(CLI::App& cmd, CommonOptions& o) {
  auto* data = cmd.add_option("--data", o.data_path, "CSV file of numeric points");
  auto* blobs = cmd.add_option("--blobs", o.blobs,
                               "Synthetic data: k=K,n=N,d=D,spread=S[,seed=S][,lo=L,hi=H]");
  data->excludes(blobs);
  cmd.add_option("--label-column", o.label_column, "Zero-based CSV column to drop");
  cmd.add_option("--k", o.k, "Cluster count")->capture_default_str();
  cmd.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd.add_option("--tol", o.kmeans.tol, "Centroid displacement tolerance")->capture_default_str();
  cmd.add_option("--max-iter", o.kmeans.max_iter, "Lloyd iteration cap")->capture_default_str();
  cmd.add_option("--pso-pop", o.pso.population, "Swarm population")->capture_default_str();
  cmd.add_option("--pso-c1", o.pso.c1, "Cognitive coefficient")->capture_default_str();
  cmd.add_option("--pso-c2", o.pso.c2, "Social coefficient")->capture_default_str();
  cmd.add_option("--pso-w", o.pso.inertia_weight, "Inertia weight")->capture_default_str();
  cmd.add_option("--pso-max-iter", o.pso.max_iter, "Swarm iteration cap")->capture_default_str();
  cmd.add_option("--pso-stall", o.pso.stall_tol, "Stall tolerance")->capture_default_str();
  cmd.add_option("--pso-patience", o.pso.stall_patience, "Stall window in iterations")
      ->capture_default_str();
  cmd.add_option("--pso-vmax", o.pso.vmax_fraction, "Velocity limit as fraction of box width")
      ->capture_default_str();
  cmd.add_option("--sample-fraction", o.sample_fraction, "Fitness sample fraction")
      ->capture_default_str();
  cmd.add_option("--data-seeds", o.data_seeds, "Forgy-seeded particles (default: population/2)");
  cmd.add_option("--out", o.out, "Report path (default: standard output)");
  cmd.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd.add_flag("--timings", o.timings, "Record wall-clock times (reports stop being reproducible)");
  cmd.add_option("--threads", o.threads, "Worker threads")->capture_default_str();
}

RunSpec to_spec(const CommonOptions& o) {
  RunSpec spec;
  if (!o.data_path.empty()) {
    spec.source = CsvSource{o.data_path, o.label_column};
  } else if (!o.blobs.empty()) {
    spec.source = parse_blob_source(o.blobs);
  } else {
    throw ConfigError("one data source is required: --data <csv> or --blobs <spec>");
  }
  spec.initializer = parse_initializer(o.init);
  spec.kmeans = o.kmeans;
  spec.kmeans.k = o.k;
  spec.pso = o.pso;
  spec.sample.fraction = o.sample_fraction;
  spec.data_seeds = o.data_seeds;
  spec.seed = o.seed;
  spec.timings = o.timings;
  return spec;
}

std::vector<Initializer> parse_initializers(const std::string& list) {
  std::vector<Initializer> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto name =
        list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!name.empty()) out.push_back(parse_initializer(name));
    start = comma == std::string::npos ? list.size() + 1 : comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-means with random, k-means++ and swarm-optimized initialization"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Cluster one data set and report the result");
  add_common(*run_cmd, run_opts);
  run_cmd->add_option("--init", run_opts.init, "random | kmeanspp | pso")
      ->check(CLI::IsMember({"random", "kmeanspp", "pso"}))
      ->capture_default_str();

  CommonOptions bench_opts;
  std::string inits = "random,kmeanspp,pso";
  std::size_t repeats = 30;
  auto* bench_cmd = app.add_subcommand("bench", "Compare initializers over derived seeds");
  add_common(*bench_cmd, bench_opts);
  bench_cmd->add_option("--inits", inits, "Comma-separated initializers")->capture_default_str();
  bench_cmd->add_option("--repeats", repeats, "Seeds per initializer")->capture_default_str();

  BlobSpec gen;
  std::uint64_t gen_seed = 0;
  double gen_lo = 0.0;
  double gen_hi = 10.0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen-blobs", "Write Gaussian blobs with a label column");
  gen_cmd->add_option("--k", gen.k, "Blob count")->capture_default_str();
  gen_cmd->add_option("--n-per", gen.n_per, "Points per blob")->capture_default_str();
  gen_cmd->add_option("--d", gen.d, "Dimensionality")->capture_default_str();
  gen_cmd->add_option("--spread", gen.spread, "Standard deviation")->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--lo", gen_lo, "Lower edge of the center box")->capture_default_str();
  gen_cmd->add_option("--hi", gen_hi, "Upper edge of the center box")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run_cmd) {
      RunSpec spec = to_spec(run_opts);
      spec.pso.threads = run_opts.threads;
      const RunOutcome outcome = run_once(spec);
      const ReportFormat format = parse_report_format(run_opts.format);
      if (run_opts.out.empty()) {
        std::cout << render_run(outcome, format);
      } else {
        emit_run(outcome, format, run_opts.out);
      }
    } else if (*bench_cmd) {
      const RunSpec spec = to_spec(bench_opts);
      const BenchReport report = bench(spec, parse_initializers(inits), repeats, bench_opts.threads);
      const ReportFormat format = parse_report_format(bench_opts.format);
      if (bench_opts.out.empty()) {
        std::cout << render_report(report, format);
      } else {
        emit_report(report, format, bench_opts.out);
      }
    } else if (*gen_cmd) {
      gen.box = Bounds{std::vector<double>(gen.d, gen_lo), std::vector<double>(gen.d, gen_hi)};
      const Blobs blobs = generate_blobs(gen, gen_seed);
      write_csv(gen_out, blobs.data, &blobs.labels);
    }
  } catch (const DataError& e) {
    std::cerr << "swarmkm: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "swarmkm: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
