#include "swarmkm/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <string>
#include <thread>

#include "swarmkm/errors.hpp"
#include "swarmkm/random.hpp"
#include "swarmkm/swarm_init.hpp"

namespace swarmkm {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string_view to_string(Initializer init) {
  switch (init) {
    case Initializer::kRandom: return "random";
    case Initializer::kKMeansPP: return "kmeanspp";
    case Initializer::kPso: return "pso";
  }
  return "unknown";
}

Initializer parse_initializer(std::string_view name) {
  if (name == "random") return Initializer::kRandom;
  if (name == "kmeanspp") return Initializer::kKMeansPP;
  if (name == "pso") return Initializer::kPso;
  throw ConfigError("unknown initializer '" + std::string(name) +
                    "' (expected random, kmeanspp or pso)");
}

void RunSpec::validate() const {
  kmeans.validate();
  pso.validate();
  sample.validate();
  if (const auto* blobs = std::get_if<BlobSource>(&source)) blobs->spec.validate();
  if (data_seeds && *data_seeds > pso.population) {
    throw ConfigError("data seed count exceeds the swarm population");
  }
}

RunSpec resolve(const RunSpec& spec) {
  spec.validate();
  RunSpec out = spec;
  if (auto* blobs = std::get_if<BlobSource>(&out.source)) {
    if (!blobs->seed) blobs->seed = derive_seed(spec.seed, Stream::kData);
    blobs->spec.box = blobs->spec.resolved_box();
  }
  if (!out.data_seeds) out.data_seeds = default_data_seeds(out.pso);
  out.kmeans.seed = derive_seed(spec.seed, Stream::kInit);
  out.pso.seed = derive_seed(spec.seed, Stream::kPso);
  out.sample.seed = derive_seed(spec.seed, Stream::kSample);
  return out;
}

DataMatrix load_data(const RunSpec& resolved) {
  if (const auto* csv = std::get_if<CsvSource>(&resolved.source)) {
    return load_csv(csv->path, csv->label_column);
  }
  const auto& blobs = std::get<BlobSource>(resolved.source);
  return generate_blobs(blobs.spec, blobs.seed.value_or(derive_seed(resolved.seed, Stream::kData)))
      .data;
}

RunOutcome run_once(const RunSpec& spec) {
  const RunSpec resolved = resolve(spec);
  return run_once(resolved, load_data(resolved));
}

RunOutcome run_once(const RunSpec& spec, const DataMatrix& data) {
  RunOutcome out;
  out.spec = resolve(spec);
  const RunSpec& rs = out.spec;
  const std::size_t k = rs.kmeans.k;
  if (k > data.n()) {
    throw ConfigError("k = " + std::to_string(k) + " exceeds the number of points (" +
                      std::to_string(data.n()) + ")");
  }

  out.record.initializer = rs.initializer;
  out.record.seed = rs.seed;

  const auto init_start = Clock::now();
  switch (rs.initializer) {
    case Initializer::kRandom:
      out.initial_centroids = init_random(data, k, rs.kmeans.seed);
      break;
    case Initializer::kKMeansPP:
      out.initial_centroids = init_kmeanspp(data, k, rs.kmeans.seed);
      break;
    case Initializer::kPso: {
      auto swarm = pso_initialize(data, k, rs.pso, rs.sample, *rs.data_seeds);
      out.initial_centroids = std::move(swarm.centroids);
      out.gbest_trace = std::move(swarm.gbest_trace);
      out.gbest_fitness = swarm.best_fitness;
      out.record.pso_fitness_evals = swarm.evaluations;
      break;
    }
  }
  const double init_ms = elapsed_ms(init_start);

  const auto lloyd_start = Clock::now();
  out.result = lloyd_run(data, out.initial_centroids, rs.kmeans);
  const double lloyd_ms = elapsed_ms(lloyd_start);

  out.record.iterations = out.result.iterations;
  out.record.converged = out.result.converged;
  out.record.inertia = out.result.inertia;
  if (rs.timings) {
    out.record.init_ms = init_ms;
    out.record.lloyd_ms = lloyd_ms;
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ConfigError("median of an empty sequence");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<RunRecord> records_of(const BenchReport& report) {
  std::vector<RunRecord> records;
  records.reserve(report.runs.size());
  for (const auto& run : report.runs) records.push_back(run.record);
  return records;
}

std::vector<Aggregate> aggregate(std::span<const RunRecord> records) {
  std::vector<Initializer> order;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.initializer) == order.end()) {
      order.push_back(r.initializer);
    }
  }

  std::vector<Aggregate> out;
  std::optional<double> random_median;
  for (const Initializer init : order) {
    std::vector<double> iterations;
    std::vector<double> inertias;
    for (const auto& r : records) {
      if (r.initializer != init) continue;
      iterations.push_back(static_cast<double>(r.iterations));
      inertias.push_back(r.inertia);
    }
    Aggregate agg;
    agg.initializer = init;
    agg.runs = iterations.size();
    agg.mean_iterations = 0.0;
    for (const double v : iterations) agg.mean_iterations += v;
    agg.mean_iterations /= static_cast<double>(iterations.size());
    agg.mean_inertia = 0.0;
    for (const double v : inertias) agg.mean_inertia += v;
    agg.mean_inertia /= static_cast<double>(inertias.size());
    agg.median_iterations = median(iterations);
    agg.median_inertia = median(inertias);
    if (init == Initializer::kRandom) random_median = agg.median_iterations;
    out.push_back(agg);
  }
  if (random_median) {
    for (auto& agg : out) agg.iteration_ratio_vs_random = *random_median / agg.median_iterations;
  }
  return out;
}

BenchReport bench(const RunSpec& spec, const std::vector<Initializer>& initializers,
                  std::size_t repeats, std::size_t threads) {
  if (repeats == 0) throw ConfigError("repeats must be at least 1");
  if (initializers.empty()) throw ConfigError("bench needs at least one initializer");
  for (std::size_t i = 0; i < initializers.size(); ++i) {
    for (std::size_t j = i + 1; j < initializers.size(); ++j) {
      if (initializers[i] == initializers[j]) {
        throw ConfigError("initializer '" + std::string(to_string(initializers[i])) +
                          "' listed twice");
      }
    }
  }
  if (threads == 0) throw ConfigError("thread count must be at least 1");

  BenchReport report;
  report.spec = resolve(spec);
  report.initializers = initializers;
  report.repeats = repeats;
  const DataMatrix data = load_data(report.spec);

  const std::size_t cells = initializers.size() * repeats;
  report.runs.resize(cells);
  auto run_cell = [&](std::size_t cell) {
    RunSpec cell_spec = report.spec;
    cell_spec.initializer = initializers[cell / repeats];
    cell_spec.seed = derive_seed(report.spec.seed, Stream::kRepeat, cell % repeats);
    report.runs[cell] = run_once(cell_spec, data);
  };

  const std::size_t workers = std::min(threads, cells);
  if (workers <= 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t cell = next++; cell < cells; cell = next++) run_cell(cell);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  const auto records = records_of(report);
  report.aggregates = aggregate(records);
  return report;
}

}  // namespace swarmkm
