#include "swarmkm/dataset.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "helpers.hpp"
#include "swarmkm/errors.hpp"

namespace swarmkm {
namespace {

namespace fs = std::filesystem;

class CsvFileTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swarmkm_dataset_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path;
  }

  fs::path dir_;
};

const fs::path kIris = fs::path(SWARMKM_DATA_DIR) / "iris.csv";

TEST(LoadCsv, IrisWithLabelColumn) {
  const auto data = load_csv(kIris, 4);
  EXPECT_EQ(data.n(), 150u);
  EXPECT_EQ(data.d(), 4u);
  EXPECT_DOUBLE_EQ(data.row(0)[0], 5.1);
  EXPECT_DOUBLE_EQ(data.row(149)[3], 1.8);
}

TEST_F(CsvFileTest, SingleRowNoHeader) {
  const auto data = load_csv(write("one.csv", "1.0,2.0\n"));
  EXPECT_EQ(data.n(), 1u);
  EXPECT_EQ(data.d(), 2u);
  EXPECT_EQ(data.row(0)[1], 2.0);
}

TEST_F(CsvFileTest, NonNumericCellNamesRowAndColumn) {
  const auto path = write("bad.csv", "1.0,2.0\n3.0,4.0\n1.0,abc\n");
  try {
    load_csv(path);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("row 3"), std::string::npos) << what;
    EXPECT_NE(what.find("column 2"), std::string::npos) << what;
  }
}

TEST_F(CsvFileTest, HeaderIsDetectedAndSkipped) {
  const auto data = load_csv(write("h.csv", "a,b,label\n1,2,x\n3,4,y\n"), 2);
  EXPECT_EQ(data.n(), 2u);
  EXPECT_EQ(data.d(), 2u);
  EXPECT_EQ(data.row(1)[0], 3.0);
}

TEST_F(CsvFileTest, LabelColumnMayHoldText) {
  const auto data = load_csv(write("l.csv", "setosa,1,2\nvirginica,3,4\n"), 0);
  EXPECT_EQ(data.n(), 2u);
  EXPECT_EQ(data.row(0)[0], 1.0);
}

TEST_F(CsvFileTest, RaggedRowIsRejected) {
  EXPECT_THROW(load_csv(write("r.csv", "1,2\n3,4,5\n")), DataError);
  EXPECT_THROW(load_csv(write("r2.csv", "1,2,3\n3,4\n")), DataError);
}

TEST_F(CsvFileTest, HeaderOnlyHasNoDataRows) {
  EXPECT_THROW(load_csv(write("e.csv", "a,b\n")), DataError);
  EXPECT_THROW(load_csv(write("e2.csv", "")), DataError);
}

TEST_F(CsvFileTest, NonFiniteValuesAreRejected) {
  EXPECT_THROW(load_csv(write("n.csv", "1,2\nnan,4\n")), DataError);
  EXPECT_THROW(load_csv(write("i.csv", "1,2\ninf,4\n")), DataError);
}

TEST_F(CsvFileTest, LabelColumnOutOfRange) {
  EXPECT_THROW(load_csv(write("o.csv", "1,2\n"), 2), DataError);
}

TEST(LoadCsv, MissingFile) {
  EXPECT_THROW(load_csv("/nonexistent/definitely/missing.csv"), DataError);
}

TEST_F(CsvFileTest, BlobCsvRoundTrip) {
  const auto blobs = generate_blobs(BlobSpec{3, 5, 2, 0.5, {}}, 11);
  const auto path = dir_ / "blobs.csv";
  write_csv(path, blobs.data, &blobs.labels);
  EXPECT_EQ(load_csv(path, 2), blobs.data);
}

TEST(GenerateBlobs, IrisScaleShape) {
  const auto blobs = generate_blobs(BlobSpec{4, 38, 4, 0.3, {}}, 42);
  EXPECT_EQ(blobs.data.n(), 152u);
  EXPECT_EQ(blobs.data.d(), 4u);
  EXPECT_EQ(blobs.centers.k(), 4u);
  EXPECT_EQ(blobs.labels.size(), 152u);
}

TEST(GenerateBlobs, SeedDeterminesOutputBitForBit) {
  const BlobSpec spec{4, 38, 4, 0.3, {}};
  const auto a = generate_blobs(spec, 42);
  const auto b = generate_blobs(spec, 42);
  EXPECT_EQ(a.data, b.data);
  EXPECT_EQ(a.centers, b.centers);
  EXPECT_NE(generate_blobs(spec, 43).data, a.data);
}

TEST(GenerateBlobs, DegenerateBlobSitsOnItsCenter) {
  const auto blobs = generate_blobs(BlobSpec{1, 1, 3, 0.001, {}}, 5);
  EXPECT_LT(std::sqrt(squared_distance(blobs.data.row(0), blobs.centers.center(0))), 0.01);
}

TEST(GenerateBlobs, CentersDoNotDependOnSpread) {
  const auto narrow = generate_blobs(BlobSpec{4, 10, 4, 0.1, {}}, 9);
  const auto wide = generate_blobs(BlobSpec{4, 10, 4, 2.0, {}}, 9);
  EXPECT_EQ(narrow.centers, wide.centers);
}

TEST(GenerateBlobs, InvalidBoxIsRejected) {
  BlobSpec spec{2, 3, 2, 0.5, Bounds{{0.0, 5.0}, {1.0, 4.0}}};
  EXPECT_THROW(generate_blobs(spec, 1), ConfigError);
  spec.spread = 0.0;
  spec.box = {};
  EXPECT_THROW(generate_blobs(spec, 1), ConfigError);
}

TEST(MinCenterSeparation, PairwiseMinimum) {
  const auto c = Centroids::from_rows({{0, 0}, {3, 4}, {0, 1}});
  EXPECT_DOUBLE_EQ(min_center_separation(c), 1.0);
  EXPECT_EQ(min_center_separation(Centroids::from_rows({{1, 1}})), 0.0);
}

TEST(BoundsOf, TwoPointExtent) {
  const auto box = bounds_of(DataMatrix::from_rows({{0, 10}, {2, 4}}));
  EXPECT_EQ(box.lower, (std::vector<double>{0, 4}));
  EXPECT_EQ(box.upper, (std::vector<double>{2, 10}));
}

TEST(BoundsOf, ZeroWidthIsWidened) {
  const auto box = bounds_of(DataMatrix::from_rows({{3, 3}}));
  EXPECT_EQ(box.lower, (std::vector<double>{2.5, 2.5}));
  EXPECT_EQ(box.upper, (std::vector<double>{3.5, 3.5}));
}

TEST(BoundsOf, IrisExtent) {
  // Column minima and maxima of the Iris table, computed independently.
  const auto box = bounds_of(load_csv(kIris, 4));
  const std::vector<double> lower{4.3, 2.0, 1.0, 0.1};
  const std::vector<double> upper{7.9, 4.4, 6.9, 2.5};
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_DOUBLE_EQ(box.lower[j], lower[j]);
    EXPECT_DOUBLE_EQ(box.upper[j], upper[j]);
  }
}

TEST(BoundsOf, ContainsEveryPointWithPositiveWidth) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 20);
    const std::size_t d = 1 + uniform_index(rng, 5);
    auto data = testing_support::random_data(rng, n, d);
    const auto box = bounds_of(data);
    for (std::size_t j = 0; j < d; ++j) EXPECT_GT(box.width(j), 0.0);
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(box.contains(data.row(i)));
  }
}

TEST(SampleSubset, FullFractionIsIdentity) {
  const auto data = load_csv(kIris, 4);
  EXPECT_EQ(sample_subset(data, SampleSpec{1.0, 99}), data);
}

TEST(SampleSubset, SizeArithmetic) {
  const auto data = load_csv(kIris, 4);
  const auto indices = sample_indices(data.n(), SampleSpec{0.2, 7});
  EXPECT_EQ(indices.size(), 30u);
  EXPECT_EQ(std::set<std::size_t>(indices.begin(), indices.end()).size(), 30u);
  EXPECT_EQ(sample_subset(data, SampleSpec{0.2, 7}).n(), 30u);
}

TEST(SampleSubset, NeverEmpty) {
  const auto data = DataMatrix::from_rows({{1}, {2}, {3}});
  EXPECT_EQ(sample_subset(data, SampleSpec{0.01, 1}).n(), 1u);
}

TEST(SampleSubset, InvalidFraction) {
  const auto data = DataMatrix::from_rows({{1}, {2}});
  EXPECT_THROW(sample_subset(data, SampleSpec{0.0, 1}), ConfigError);
  EXPECT_THROW(sample_subset(data, SampleSpec{1.5, 1}), ConfigError);
}

TEST(SampleSubset, RowsComeFromInputInOrderWithoutRepeats) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 40);
    const auto data = testing_support::random_data(rng, n, 3);
    const SampleSpec spec{0.05 + 0.95 * uniform01(rng), rng()};
    const auto indices = sample_indices(n, spec);
    const auto sample = sample_subset(data, spec);
    ASSERT_EQ(sample.n(), indices.size());
    for (std::size_t s = 0; s < indices.size(); ++s) {
      if (s > 0) EXPECT_LT(indices[s - 1], indices[s]);
      const auto row = sample.row(s);
      const auto src = data.row(indices[s]);
      EXPECT_TRUE(std::equal(row.begin(), row.end(), src.begin()));
    }
    EXPECT_EQ(sample_subset(data, spec), sample);
  }
}

TEST(DataMatrix, RejectsNonFiniteAndBadShape) {
  EXPECT_THROW(DataMatrix(1, 2, {1.0, std::nan("")}), DataError);
  EXPECT_THROW(DataMatrix(2, 2, {1.0, 2.0}), ConfigError);
  EXPECT_THROW(DataMatrix(0, 2, {}), ConfigError);
  EXPECT_THROW(DataMatrix::from_rows({{1.0}, {1.0, 2.0}}), ConfigError);
}

}  // namespace
}  // namespace swarmkm
