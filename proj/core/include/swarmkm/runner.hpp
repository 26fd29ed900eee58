#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swarmkm/dataset.hpp"
#include "swarmkm/kmeans.hpp"
#include "swarmkm/pso.hpp"

namespace swarmkm {

enum class Initializer { kRandom, kKMeansPP, kPso };

std::string_view to_string(Initializer init);
/// Accepts "random", "kmeanspp", "pso"; throws ConfigError otherwise.
Initializer parse_initializer(std::string_view name);

struct CsvSource {
  std::filesystem::path path;
  std::optional<std::size_t> label_column;
};

struct BlobSource {
  BlobSpec spec;
  std::optional<std::uint64_t> seed;  // unset: derived from the master seed
};

using DataSource = std::variant<CsvSource, BlobSource>;

struct RunSpec {
  DataSource source = BlobSource{};
  Initializer initializer = Initializer::kRandom;
  KMeansConfig kmeans;  // kmeans.k is the cluster count
  pso::PsoConfig pso;
  SampleSpec sample;
  std::optional<std::size_t> data_seeds;  // unset: default_data_seeds(pso)
  std::uint64_t seed = 0;                 // master seed
  bool timings = false;                   // wall-clock fields stay 0 when off

  void validate() const;
};

/// Fills every derived or defaulted field: the blob seed, the data-seed
/// count, and the kmeans/pso/sample seeds derived from `seed`.
RunSpec resolve(const RunSpec& spec);

/// Loads or generates the data named by a resolved spec.
DataMatrix load_data(const RunSpec& resolved);

struct RunRecord {
  Initializer initializer = Initializer::kRandom;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  bool converged = false;
  double inertia = 0.0;
  double init_ms = 0.0;
  double lloyd_ms = 0.0;
  std::size_t pso_fitness_evals = 0;  // pso only
};

struct RunOutcome {
  RunSpec spec;  // resolved
  RunRecord record;
  Centroids initial_centroids;
  ClusterResult result;
  std::vector<double> gbest_trace;  // pso only
  double gbest_fitness = 0.0;       // pso only
};

RunOutcome run_once(const RunSpec& spec);
/// Runs on already-loaded data; `spec.source` is only echoed.
RunOutcome run_once(const RunSpec& spec, const DataMatrix& data);

struct Aggregate {
  Initializer initializer = Initializer::kRandom;
  std::size_t runs = 0;
  double median_iterations = 0.0;
  double mean_iterations = 0.0;
  double median_inertia = 0.0;
  double mean_inertia = 0.0;
  std::optional<double> iteration_ratio_vs_random;  // needs a random arm
};

struct BenchReport {
  RunSpec spec;  // resolved; `initializer` is ignored
  std::vector<Initializer> initializers;
  std::size_t repeats = 0;
  std::vector<RunOutcome> runs;  // initializer-major, then repeat order
  std::vector<Aggregate> aggregates;
};

/// Records in `runs` order.
std::vector<RunRecord> records_of(const BenchReport& report);

/// Per-initializer aggregates, in the order initializers first appear.
std::vector<Aggregate> aggregate(std::span<const RunRecord> records);

/// Every initializer sees the same data and the same `repeats` derived
/// seeds. Cells are independent and may run on `threads` workers; the
/// report does not depend on scheduling.
BenchReport bench(const RunSpec& spec, const std::vector<Initializer>& initializers,
                  std::size_t repeats, std::size_t threads = 1);

double median(std::vector<double> values);

}  // namespace swarmkm
