#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swarmkm {

/// Dense row-major matrix of finite reals: `rows()` points of `dims()`
/// coordinates each. Shared storage for data sets and centroid sets.
class PointSet {
 public:
  PointSet() = default;
  /// Throws ConfigError if the shape is empty or does not match `values`,
  /// DataError if any value is non-finite.
  PointSet(std::size_t rows, std::size_t dims, std::vector<double> values);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t dims() const noexcept { return dims_; }
  bool empty() const noexcept { return rows_ == 0; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * dims_, dims_};
  }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dims_ = 0;
  std::vector<double> values_;
};

/// The clustering input: n >= 1 points in d >= 1 dimensions.
class DataMatrix : public PointSet {
 public:
  DataMatrix() = default;
  DataMatrix(std::size_t n, std::size_t d, std::vector<double> values)
      : PointSet(n, d, std::move(values)) {}
  explicit DataMatrix(PointSet points) : PointSet(std::move(points)) {}

  static DataMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    return DataMatrix(PointSet::from_rows(rows));
  }

  std::size_t n() const noexcept { return rows(); }
  std::size_t d() const noexcept { return dims(); }
};

/// An ordered set of k >= 1 centers in d dimensions.
class Centroids : public PointSet {
 public:
  Centroids() = default;
  Centroids(std::size_t k, std::size_t d, std::vector<double> values)
      : PointSet(k, d, std::move(values)) {}
  explicit Centroids(PointSet points) : PointSet(std::move(points)) {}

  static Centroids from_rows(const std::vector<std::vector<double>>& rows) {
    return Centroids(PointSet::from_rows(rows));
  }

  std::size_t k() const noexcept { return rows(); }
  std::size_t d() const noexcept { return dims(); }
  std::span<const double> center(std::size_t i) const noexcept { return row(i); }
};

/// Axis-aligned box; lower[j] <= upper[j], both finite.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dims() const noexcept { return lower.size(); }
  double width(std::size_t j) const noexcept { return upper[j] - lower[j]; }
  bool contains(std::span<const double> x) const noexcept;

  /// Throws ConfigError on size mismatch, non-finite entries or lower > upper.
  void validate() const;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace swarmkm
