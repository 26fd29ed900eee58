#include "swarmkm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "swarmkm/errors.hpp"
#include "swarmkm/random.hpp"

namespace swarmkm {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      return cells;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

// Parses a finite decimal real; the whole cell must be consumed.
std::optional<double> parse_real(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string where(const std::filesystem::path& path, std::size_t row, std::size_t column) {
  return path.string() + ": row " + std::to_string(row) + ", column " + std::to_string(column);
}

}  // namespace

void SampleSpec::validate() const {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ConfigError("sample fraction must lie in (0, 1]");
  }
}

std::size_t SampleSpec::sample_size(std::size_t n) const {
  const auto rounded = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(rounded, 1, n);
}

DataMatrix load_csv(const std::filesystem::path& path, std::optional<std::size_t> label_column) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open file for reading");

  std::vector<double> values;
  std::size_t width = 0;  // raw column count, fixed by the first non-blank row
  std::size_t rows = 0;
  bool first = true;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (trim(line).empty()) continue;
    const auto cells = split_cells(line);

    if (first) {
      width = cells.size();
      if (label_column && *label_column >= width) {
        throw DataError(path.string() + ": label column " + std::to_string(*label_column) +
                        " is out of range for " + std::to_string(width) + " columns");
      }
      if (label_column && width == 1) {
        throw DataError(path.string() + ": no numeric columns besides the label");
      }
      first = false;
      bool header = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (label_column && c == *label_column) continue;
        if (!parse_real(cells[c])) header = true;
      }
      if (header) continue;
    }

    if (cells.size() != width) {
      throw DataError(where(path, line_no, std::min(cells.size(), width) + 1) + ": row has " +
                      std::to_string(cells.size()) + " columns, expected " +
                      std::to_string(width));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (label_column && c == *label_column) continue;
      const auto value = parse_real(cells[c]);
      if (!value) {
        throw DataError(where(path, line_no, c + 1) + ": not a finite number: '" +
                        std::string(cells[c]) + "'");
      }
      values.push_back(*value);
    }
    ++rows;
  }
  if (in.bad()) throw DataError(path.string() + ": read error");
  if (rows == 0) throw DataError(path.string() + ": no data rows");

  const std::size_t d = width - (label_column ? 1 : 0);
  return DataMatrix(rows, d, std::move(values));
}

void write_csv(const std::filesystem::path& path, const DataMatrix& data,
               const std::vector<std::size_t>* labels) {
  if (labels && labels->size() != data.n()) {
    throw ConfigError("label count does not match row count");
  }
  std::ostringstream out;
  out.precision(17);
  for (std::size_t j = 0; j < data.d(); ++j) out << (j ? "," : "") << 'x' << j;
  if (labels) out << ",label";
  out << '\n';
  for (std::size_t i = 0; i < data.n(); ++i) {
    const auto row = data.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    if (labels) out << ',' << (*labels)[i];
    out << '\n';
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError(path.string() + ": cannot open file for writing");
  file << out.str();
  if (!file) throw ConfigError(path.string() + ": write failed");
}

void BlobSpec::validate() const {
  if (k == 0 || n_per == 0 || d == 0) throw ConfigError("blobs need k, n_per and d >= 1");
  if (!(spread > 0.0) || !std::isfinite(spread)) throw ConfigError("blob spread must be > 0");
  if (!box.lower.empty() || !box.upper.empty()) {
    box.validate();
    if (box.dims() != d) throw ConfigError("blob box dimensionality does not match d");
  }
}

Bounds BlobSpec::resolved_box() const {
  if (box.lower.empty() && box.upper.empty()) {
    return Bounds{std::vector<double>(d, 0.0), std::vector<double>(d, 10.0)};
  }
  return box;
}

Blobs generate_blobs(const BlobSpec& spec, std::uint64_t seed) {
  spec.validate();
  const Bounds box = spec.resolved_box();
  Rng rng(seed);

  std::vector<double> centers(spec.k * spec.d);
  for (std::size_t c = 0; c < spec.k; ++c) {
    for (std::size_t j = 0; j < spec.d; ++j) {
      centers[c * spec.d + j] = uniform_real(rng, box.lower[j], box.upper[j]);
    }
  }

  std::normal_distribution<double> noise(0.0, spec.spread);
  std::vector<double> points;
  std::vector<std::size_t> labels;
  points.reserve(spec.k * spec.n_per * spec.d);
  labels.reserve(spec.k * spec.n_per);
  for (std::size_t c = 0; c < spec.k; ++c) {
    for (std::size_t i = 0; i < spec.n_per; ++i) {
      for (std::size_t j = 0; j < spec.d; ++j) points.push_back(centers[c * spec.d + j] + noise(rng));
      labels.push_back(c);
    }
  }
  return Blobs{DataMatrix(spec.k * spec.n_per, spec.d, std::move(points)),
               Centroids(spec.k, spec.d, std::move(centers)), std::move(labels)};
}

double min_center_separation(const Centroids& centers) {
  if (centers.k() < 2) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < centers.k(); ++a) {
    for (std::size_t b = a + 1; b < centers.k(); ++b) {
      best = std::min(best, squared_distance(centers.center(a), centers.center(b)));
    }
  }
  return std::sqrt(best);
}

Bounds bounds_of(const DataMatrix& data) {
  Bounds box{std::vector<double>(data.row(0).begin(), data.row(0).end()),
             std::vector<double>(data.row(0).begin(), data.row(0).end())};
  for (std::size_t i = 1; i < data.n(); ++i) {
    const auto row = data.row(i);
    for (std::size_t j = 0; j < data.d(); ++j) {
      box.lower[j] = std::min(box.lower[j], row[j]);
      box.upper[j] = std::max(box.upper[j], row[j]);
    }
  }
  for (std::size_t j = 0; j < data.d(); ++j) {
    if (box.lower[j] == box.upper[j]) {
      box.lower[j] -= 0.5;
      box.upper[j] += 0.5;
    }
  }
  return box;
}

std::vector<std::size_t> sample_indices(std::size_t n, const SampleSpec& spec) {
  spec.validate();
  const std::size_t m = spec.sample_size(n);
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  if (m == n) return indices;

  Rng rng(spec.seed);
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(indices[i], indices[i + uniform_index(rng, n - i)]);
  }
  indices.resize(m);
  std::sort(indices.begin(), indices.end());
  return indices;
}

DataMatrix sample_subset(const DataMatrix& data, const SampleSpec& spec) {
  const auto indices = sample_indices(data.n(), spec);
  if (indices.size() == data.n()) return data;
  std::vector<double> values;
  values.reserve(indices.size() * data.d());
  for (const auto i : indices) {
    const auto row = data.row(i);
    values.insert(values.end(), row.begin(), row.end());
  }
  return DataMatrix(indices.size(), data.d(), std::move(values));
}

}  // namespace swarmkm
