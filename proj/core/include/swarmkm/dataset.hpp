#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "swarmkm/points.hpp"

namespace swarmkm {

/// Subset selection for the fitness sample. The resulting sample holds
/// max(1, round(fraction * n)) distinct rows.
struct SampleSpec {
  double fraction = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
  std::size_t sample_size(std::size_t n) const;
};

/// Reads a comma-separated numeric table. A single header row is detected
/// automatically when the first row has a non-numeric cell in a numeric
/// column. `label_column` (zero-based) is dropped from the result. Errors
/// are DataError and name the offending 1-based row and column.
DataMatrix load_csv(const std::filesystem::path& path,
                    std::optional<std::size_t> label_column = std::nullopt);

/// Writes `data` as CSV with a header row (`x0,...,x{d-1}[,label]`) and
/// round-trippable numbers. When `labels` is given it becomes the trailing
/// column.
void write_csv(const std::filesystem::path& path, const DataMatrix& data,
               const std::vector<std::size_t>* labels = nullptr);

struct BlobSpec {
  std::size_t k = 4;
  std::size_t n_per = 38;
  std::size_t d = 4;
  double spread = 0.3;
  Bounds box;  // empty means [0, 10]^d

  void validate() const;
  Bounds resolved_box() const;
};

struct Blobs {
  DataMatrix data;                  // cluster-major: n_per rows per center
  Centroids centers;                // the generating centers
  std::vector<std::size_t> labels;  // true center index per row
};

/// Draws k centers uniformly in the box, then n_per isotropic Gaussian points
/// with standard deviation `spread` around each.
Blobs generate_blobs(const BlobSpec& spec, std::uint64_t seed);

/// Smallest pairwise Euclidean distance between centers (0 when k == 1).
/// The centers drawn by generate_blobs depend only on (k, d, box, seed), so
/// this can be used to pick a spread for a target separation.
double min_center_separation(const Centroids& centers);

/// Per-column min/max. Columns with zero extent are widened by 0.5 on
/// each side so every dimension has positive width.
Bounds bounds_of(const DataMatrix& data);

/// Uniform sample without replacement; rows keep their original order.
DataMatrix sample_subset(const DataMatrix& data, const SampleSpec& spec);

/// Indices selected by sample_subset, ascending.
std::vector<std::size_t> sample_indices(std::size_t n, const SampleSpec& spec);

}  // namespace swarmkm
