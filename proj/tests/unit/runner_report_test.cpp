#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "swarmkm/errors.hpp"
#include "swarmkm/report.hpp"
#include "swarmkm/runner.hpp"
#include "swarmkm/swarm_init.hpp"

namespace swarmkm {
namespace {

namespace fs = std::filesystem;

const fs::path kIris = fs::path(SWARMKM_DATA_DIR) / "iris.csv";

RunSpec iris_spec(Initializer init, std::uint64_t seed) {
  RunSpec spec;
  spec.source = CsvSource{kIris, 4};
  spec.initializer = init;
  spec.seed = seed;
  return spec;
}

RunSpec blob_spec() {
  RunSpec spec;
  spec.source = BlobSource{BlobSpec{4, 20, 3, 0.5, {}}, std::nullopt};
  spec.pso.max_iter = 30;
  spec.seed = 5;
  return spec;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swarmkm_report_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Initializer, NamesRoundTrip) {
  for (const auto init : {Initializer::kRandom, Initializer::kKMeansPP, Initializer::kPso}) {
    EXPECT_EQ(parse_initializer(to_string(init)), init);
  }
  EXPECT_THROW(parse_initializer("genetic"), ConfigError);
}

TEST(Resolve, MaterializesDerivedSeedsAndDefaults) {
  const auto r = resolve(blob_spec());
  const auto& blobs = std::get<BlobSource>(r.source);
  EXPECT_EQ(blobs.seed, derive_seed(5, Stream::kData));
  EXPECT_EQ(blobs.spec.box.lower, std::vector<double>(3, 0.0));
  EXPECT_EQ(r.data_seeds, 50u);
  EXPECT_EQ(r.pso.seed, derive_seed(5, Stream::kPso));
  EXPECT_EQ(r.kmeans.seed, derive_seed(5, Stream::kInit));
  EXPECT_EQ(r.sample.seed, derive_seed(5, Stream::kSample));
  EXPECT_EQ(resolve(r).pso.seed, r.pso.seed);
}

TEST(RunOnce, RandomOnIrisProducesAResult) {
  const auto out = run_once(iris_spec(Initializer::kRandom, 1));
  EXPECT_EQ(out.result.assignments.size(), 150u);
  EXPECT_TRUE(out.result.converged);
  EXPECT_GE(out.result.iterations, 2u);
  EXPECT_EQ(out.record.pso_fitness_evals, 0u);
  EXPECT_EQ(out.record.init_ms, 0.0);
}

TEST(RunOnce, PsoRecordsFitnessEvaluations) {
  auto spec = iris_spec(Initializer::kPso, 2);
  spec.pso.max_iter = 10;
  const auto out = run_once(spec);
  EXPECT_GT(out.record.pso_fitness_evals, 100u);
  EXPECT_EQ(out.gbest_trace.size(), out.record.pso_fitness_evals / 100);
}

TEST(RunOnce, DegeneratePsoIsBestOfForgy) {
  auto spec = iris_spec(Initializer::kPso, 3);
  spec.pso.max_iter = 0;
  spec.data_seeds = spec.pso.population;
  const auto out = run_once(spec);
  const auto data = load_csv(kIris, 4);
  const auto resolved = resolve(spec);
  double best = INFINITY;
  for (std::size_t s = 0; s < 100; ++s) {
    const auto c = init_random(data, 4, derive_seed(resolved.pso.seed, Stream::kForgy, s));
    best = std::min(best, fitness(encode(c), FitnessSpec{data, 4}));
  }
  EXPECT_EQ(out.gbest_fitness, best);
}

TEST(RunOnce, KLargerThanN) {
  auto spec = iris_spec(Initializer::kRandom, 1);
  spec.kmeans.k = 151;
  EXPECT_THROW(run_once(spec), ConfigError);
}

TEST(RunOnce, MissingDataFile) {
  RunSpec spec;
  spec.source = CsvSource{"/no/such/file.csv", std::nullopt};
  EXPECT_THROW(run_once(spec), DataError);
}

TEST(RunOnce, JsonIsByteIdenticalAcrossRuns) {
  auto spec = blob_spec();
  spec.initializer = Initializer::kPso;
  EXPECT_EQ(run_json(run_once(spec)), run_json(run_once(spec)));
}

TEST(Bench, SingleRandomRepeatHasUnitRatio) {
  const auto report = bench(iris_spec(Initializer::kRandom, 0), {Initializer::kRandom}, 1);
  ASSERT_EQ(report.runs.size(), 1u);
  ASSERT_EQ(report.aggregates.size(), 1u);
  EXPECT_EQ(report.aggregates[0].iteration_ratio_vs_random, 1.0);
}

TEST(Bench, NoRandomArmMeansNoRatio) {
  const auto report = bench(blob_spec(), {Initializer::kKMeansPP}, 2);
  EXPECT_FALSE(report.aggregates[0].iteration_ratio_vs_random.has_value());
}

TEST(Bench, RejectsBadArguments) {
  EXPECT_THROW(bench(blob_spec(), {Initializer::kRandom}, 0), ConfigError);
  EXPECT_THROW(bench(blob_spec(), {}, 1), ConfigError);
  EXPECT_THROW(bench(blob_spec(), {Initializer::kPso, Initializer::kPso}, 1), ConfigError);
}

TEST(Bench, KMeansPPInertiaTrendsBelowRandom) {
  const auto report = bench(iris_spec(Initializer::kRandom, 11),
                            {Initializer::kRandom, Initializer::kKMeansPP}, 30);
  EXPECT_LE(report.aggregates[1].mean_inertia, report.aggregates[0].mean_inertia);
}

TEST(Bench, SameSeedsAcrossInitializersAndIndependentOfThreads) {
  const std::vector<Initializer> inits{Initializer::kRandom, Initializer::kPso};
  const auto serial = bench(blob_spec(), inits, 4, 1);
  const auto parallel = bench(blob_spec(), inits, 4, 3);
  EXPECT_EQ(bench_json(serial), bench_json(parallel));
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(serial.runs[r].record.seed, serial.runs[4 + r].record.seed);
}

TEST(Bench, AggregatesRecomputeFromParsedCsv) {
  const auto report = bench(blob_spec(), {Initializer::kRandom, Initializer::kKMeansPP, Initializer::kPso}, 5);
  std::istringstream csv(records_csv(records_of(report)));
  const auto parsed = parse_records_csv(csv);
  const auto again = aggregate(parsed);
  ASSERT_EQ(again.size(), report.aggregates.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    EXPECT_EQ(again[i].initializer, report.aggregates[i].initializer);
    EXPECT_NEAR(again[i].mean_iterations, report.aggregates[i].mean_iterations, 1e-12);
    EXPECT_NEAR(again[i].median_iterations, report.aggregates[i].median_iterations, 1e-12);
    EXPECT_NEAR(again[i].mean_inertia, report.aggregates[i].mean_inertia, 1e-12);
    EXPECT_NEAR(again[i].median_inertia, report.aggregates[i].median_inertia, 1e-12);
    EXPECT_NEAR(*again[i].iteration_ratio_vs_random, *report.aggregates[i].iteration_ratio_vs_random,
                1e-12);
  }
}

TEST(Report, CsvRoundTripIsExact) {
  std::vector<RunRecord> records{
      {Initializer::kPso, 18446744073709551615ull, 3, true, 0.1 + 0.2, 1.0 / 3.0, 12.5, 0},
      {Initializer::kRandom, 0, 300, false, 1e-300, 0.0, 0.0, 0},
  };
  std::istringstream in(records_csv(records));
  const auto parsed = parse_records_csv(in);
  ASSERT_EQ(parsed.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(parsed[i].initializer, records[i].initializer);
    EXPECT_EQ(parsed[i].seed, records[i].seed);
    EXPECT_EQ(parsed[i].iterations, records[i].iterations);
    EXPECT_EQ(parsed[i].converged, records[i].converged);
    EXPECT_EQ(parsed[i].inertia, records[i].inertia);
    EXPECT_EQ(parsed[i].init_ms, records[i].init_ms);
    EXPECT_EQ(parsed[i].lloyd_ms, records[i].lloyd_ms);
  }
}

TEST(Report, ParseRejectsMalformedCsv) {
  std::istringstream no_header("random,1,2,true,1,0,0\n");
  EXPECT_THROW(parse_records_csv(no_header), DataError);
  std::istringstream bad(std::string(kRecordCsvHeader) + "\nrandom,1,x,true,1,0,0\n");
  EXPECT_THROW(parse_records_csv(bad), DataError);
}

TEST_F(TempDir, CsvReportHasHeaderPlusOneRowPerRecord) {
  const auto report = bench(blob_spec(), {Initializer::kRandom, Initializer::kPso}, 3);
  const auto path = dir_ / "report.csv";
  emit_report(report, ReportFormat::kCsv, path);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, report.runs.size() + 1);
}

TEST_F(TempDir, OneTraceFilePerRecord) {
  const auto report = bench(blob_spec(), {Initializer::kRandom, Initializer::kPso}, 30);
  const auto path = dir_ / "bench.json";
  emit_report(report, ReportFormat::kJson, path);
  std::size_t traces = 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().filename().string().find(".trace.") != std::string::npos) ++traces;
  }
  EXPECT_EQ(traces, 60u);
  const auto& first = report.runs.front();
  const auto trace = slurp(trace_path(path, first.record.initializer, first.record.seed));
  EXPECT_EQ(trace.rfind("step,value\n1,", 0), 0u);
}

TEST_F(TempDir, JsonEmittedTwiceIsByteIdentical) {
  const auto report = bench(blob_spec(), {Initializer::kRandom, Initializer::kPso}, 2);
  emit_report(report, ReportFormat::kJson, dir_ / "a.json");
  emit_report(report, ReportFormat::kJson, dir_ / "b.json");
  EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "b.json"));

  const auto doc = nlohmann::json::parse(slurp(dir_ / "a.json"));
  EXPECT_EQ(doc["records"].size(), 4u);
  EXPECT_EQ(doc["config"]["pso"]["population"], 100);
  EXPECT_EQ(doc["config"]["pso"]["c1"], 2.0);
  EXPECT_EQ(doc["config"]["pso"]["stall_tol"], 1e-5);
  EXPECT_EQ(doc["config"]["data_seeds"], 50);
  EXPECT_FALSE(doc["config"]["data"]["seed"].is_null());
  EXPECT_TRUE(doc.contains("version"));
}

TEST_F(TempDir, UnwritablePath) {
  const auto report = bench(blob_spec(), {Initializer::kRandom}, 1);
  EXPECT_THROW(emit_report(report, ReportFormat::kJson, dir_ / "missing" / "r.json"), ConfigError);
}

TEST(Median, OddAndEven) {
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
  EXPECT_THROW(median({}), ConfigError);
}

}  // namespace
}  // namespace swarmkm
