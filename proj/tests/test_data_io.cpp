#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "oracles.hpp"
#include "ssshapelets/data_io.hpp"
#include "ssshapelets/error.hpp"

using namespace ssshapelets;

namespace {

std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(SSSHAPELETS_DATA_DIR) / name;
}

}  // namespace

TEST(ParseUcr, CommaSeparatedRows) {
  const auto rows = parse_ucr("1,0.5,1.5,2.5\n2,3,4,5\n1,6,7,8\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].label, 0);
  EXPECT_EQ(rows[1].label, 1);
  EXPECT_EQ(rows[2].label, 0);
  EXPECT_EQ(rows[0].values, (std::vector<double>{0.5, 1.5, 2.5}));
}

TEST(ParseUcr, WhitespaceAndTabDetected) {
  const auto ws = parse_ucr("  1.0000000e+00   2.0   3.0\n  0.0000000e+00  4.0 5.0\n");
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].label, 0);
  EXPECT_EQ(ws[1].label, 1);
  EXPECT_EQ(ws[1].values, (std::vector<double>{4.0, 5.0}));

  const auto tab = parse_ucr("3\t1\t2\n4\t3\t4\n");
  ASSERT_EQ(tab.size(), 2u);
  EXPECT_EQ(tab[1].values, (std::vector<double>{3.0, 4.0}));
}

TEST(ParseUcr, ExplicitDelimiterAndBlankLines) {
  const auto rows = parse_ucr("1,2,3\n\n2,4,5\n", Delimiter::kComma);
  EXPECT_EQ(rows.size(), 2u);
  EXPECT_EQ(parse_delimiter("tab"), Delimiter::kTab);
  EXPECT_THROW(parse_delimiter("semicolon"), InputError);
}

TEST(ParseUcr, RaggedRowRejected) {
  try {
    parse_ucr("1,2,3,4\n2,5,6\n");
    FAIL() << "ragged input accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseUcr, NonNumericTokenReportsPosition) {
  try {
    parse_ucr("1,2,3\n2,4,abc\n");
    FAIL() << "non-numeric token accepted";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column 3"), std::string::npos) << msg;
  }
}

TEST(ParseUcr, EmptyAndNonFiniteRejected) {
  EXPECT_THROW(parse_ucr(""), InputError);
  EXPECT_THROW(parse_ucr("\n\n"), InputError);
  EXPECT_THROW(parse_ucr("1,nan,2\n"), InputError);
  EXPECT_THROW(parse_ucr("1\n"), InputError);
}

TEST(Znormalize, SmallSeriesMatchesOracle) {
  const RawSeries raw{0, {1.0, 2.0, 3.0}};
  const TimeSeries z = znormalize(raw);
  const double sd = oracle::population_std(raw.values);
  ASSERT_EQ(z.length(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(z.values[i], (raw.values[i] - 2.0) / sd, 1e-12);
  }
  EXPECT_NEAR(z.values[0], -1.224744871391589, 1e-12);
  EXPECT_NEAR(z.values[1], 0.0, 1e-12);
  EXPECT_NEAR(z.values[2], 1.224744871391589, 1e-12);
}

TEST(Znormalize, ConstantSeriesBecomesZeros) {
  const TimeSeries z = znormalize(RawSeries{0, {4.0, 4.0, 4.0, 4.0}});
  for (double v : z.values) EXPECT_EQ(v, 0.0);
}

TEST(Znormalize, RandomSeriesHaveZeroMeanUnitSpread) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v = oracle::random_series(5 + trial % 40, rng);
    const double a = scale(rng);
    for (double& x : v) x = a * x + 3.0;
    const TimeSeries z = znormalize(RawSeries{0, v});
    EXPECT_NEAR(oracle::mean(z.values), 0.0, 1e-9);
    EXPECT_NEAR(oracle::population_std(z.values), 1.0, 1e-9);
    const TimeSeries again = znormalize(RawSeries{0, z.values});
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(again.values[i], z.values[i], 1e-9);
    }
  }
}

TEST(Dataset, CoffeeMetadata) {
  const std::vector<std::filesystem::path> files{data_file("Coffee_TRAIN.txt"),
                                                 data_file("Coffee_TEST.txt")};
  const Dataset ds = load_ucr(files);
  EXPECT_EQ(ds.size(), 56u);
  EXPECT_EQ(ds.num_classes(), 2);
  EXPECT_EQ(ds.series_length(), 286u);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    EXPECT_EQ(ds[i].id, i);
    EXPECT_NEAR(oracle::mean(ds[i].values), 0.0, 1e-9);
  }
}

TEST(Dataset, ValidationErrors) {
  std::vector<TimeSeries> ok{{0, 0, {1.0, 2.0}}, {1, 1, {3.0, 4.0}}};
  EXPECT_NO_THROW(Dataset(ok, 2));
  EXPECT_THROW(Dataset({}, 1), InputError);
  EXPECT_THROW(Dataset({{0, 0, {1.0}}, {1, 1, {1.0, 2.0}}}, 2), InputError);
  EXPECT_THROW(Dataset({{0, 0, {1.0}}, {1, 5, {1.0}}}, 2), InputError);
  EXPECT_THROW(Dataset({{0, 0, {1.0}}}, 2), InputError);
  EXPECT_THROW(Dataset({{1, 0, {1.0}}, {0, 1, {1.0}}}, 2), InputError);
  const std::vector<std::filesystem::path> missing{data_file("does_not_exist.txt")};
  EXPECT_THROW(load_ucr(missing), InputError);
}

TEST(Dataset, WithLabelsOnlyHidesOthers) {
  const Dataset ds({{0, 0, {1.0, 2.0}}, {1, 1, {3.0, 4.0}}, {2, 1, {5.0, 1.0}}}, 2);
  const std::vector<std::size_t> keep{1};
  const Dataset hidden = ds.with_labels_only(keep);
  EXPECT_FALSE(hidden[0].label.has_value());
  EXPECT_EQ(hidden[1].label, 1);
  EXPECT_FALSE(hidden[2].label.has_value());
  EXPECT_EQ(hidden[2].values, ds[2].values);
  EXPECT_THROW(hidden.labels(), InputError);
  EXPECT_EQ(ds.labels(), (std::vector<int>{0, 1, 1}));
}
