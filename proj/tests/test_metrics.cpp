#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ssshapelets/error.hpp"
#include "ssshapelets/metrics.hpp"

using namespace ssshapelets;

TEST(Euclidean, ThreeFourFive) {
  const std::vector<double> a{0.0, 0.0};
  const std::vector<double> b{3.0, 4.0};
  EXPECT_DOUBLE_EQ(euclidean(a, b), 5.0);
  EXPECT_DOUBLE_EQ(euclidean(a, a), 0.0);
}

TEST(Euclidean, MatchesLoopAndIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::random_series(1 + t % 30, rng);
    const auto b = oracle::random_series(a.size(), rng);
    EXPECT_NEAR(euclidean(a, b), oracle::distance(a.data(), b.data(), a.size()), 1e-12);
    EXPECT_EQ(euclidean(a, b), euclidean(b, a));
  }
}

TEST(Euclidean, LengthMismatchThrows) {
  const std::vector<double> a{1.0, 2.0};
  const std::vector<double> b{1.0};
  EXPECT_THROW(euclidean(a, b), InputError);
}

TEST(ShapeletDistance, MinimumOverWindows) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto x = oracle::random_series(10 + t % 20, rng);
    const auto s = oracle::random_series(1 + t % 9, rng);
    const TimeSeries series{0, std::nullopt, x};
    const Shapelet shapelet{s, std::nullopt, 0};
    EXPECT_NEAR(shapelet_distance(shapelet, series), oracle::min_window_distance(s, x),
                1e-12);
  }
}

TEST(ShapeletDistance, SubsequenceOfSeriesIsZero) {
  std::mt19937_64 rng(13);
  const auto x = oracle::random_series(40, rng);
  const Shapelet s{std::vector<double>(x.begin() + 7, x.begin() + 19), 0, 7};
  const WindowMatch m = best_match(s.values, x);
  EXPECT_EQ(m.distance, 0.0);
  EXPECT_EQ(m.offset, 7u);
}

TEST(ShapeletDistance, TooLongThrows) {
  const TimeSeries x{0, std::nullopt, {1.0, 2.0}};
  const Shapelet s{{1.0, 2.0, 3.0}, std::nullopt, 0};
  EXPECT_THROW(shapelet_distance(s, x), InputError);
}

TEST(Transform, ShapeAndEntries) {
  std::mt19937_64 rng(14);
  std::vector<TimeSeries> series;
  for (std::size_t i = 0; i < 4; ++i) {
    series.push_back({i, std::nullopt, oracle::random_series(20, rng)});
  }
  std::vector<Shapelet> shapelets;
  for (int j = 0; j < 3; ++j) shapelets.push_back({oracle::random_series(5, rng), {}, 0});
  const RepresentationMatrix h = transform(shapelets, series);
  ASSERT_EQ(h.row_count(), 3u);
  ASSERT_EQ(h.col_count(), 4u);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(h.entries(r, c),
                  oracle::min_window_distance(shapelets[r].values, series[c].values),
                  1e-12);
      EXPECT_GE(h.entries(r, c), 0.0);
    }
  }
}

TEST(Transform, SourceSeriesEntryIsZero) {
  std::mt19937_64 rng(15);
  std::vector<TimeSeries> series;
  for (std::size_t i = 0; i < 5; ++i) {
    series.push_back({i, std::nullopt, oracle::random_series(30, rng)});
  }
  const auto& src = series[3].values;
  const std::vector<Shapelet> shapelets{
      {std::vector<double>(src.begin() + 4, src.begin() + 12), 3, 4}};
  const RepresentationMatrix h = transform(shapelets, series);
  EXPECT_EQ(h.entries(0, 3), 0.0);
}

TEST(Transform, CsvHeaderAndRows) {
  RepresentationMatrix h;
  h.entries = Eigen::MatrixXd{{1.0, 2.5}};
  const std::vector<std::size_t> ids{4, 9};
  const std::string csv = h.to_csv(ids);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "shapelet,4,9");
  EXPECT_NE(csv.find("0,1,2.5"), std::string::npos) << csv;
}

TEST(RandIndex, HandExample) {
  const std::vector<int> pred{0, 0, 1, 1};
  const std::vector<int> truth{0, 1, 0, 1};
  const PairConfusion pc = pair_confusion(pred, truth);
  EXPECT_EQ(pc.tp, 0u);
  EXPECT_EQ(pc.tn, 2u);
  EXPECT_EQ(pc.fp, 2u);
  EXPECT_EQ(pc.fn, 2u);
  EXPECT_DOUBLE_EQ(rand_index(pred, truth), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(rand_index(pred, pred), 1.0);
}

TEST(RandIndex, RelabelingInvarianceAndOracle) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 40;
    std::uniform_int_distribution<int> label(0, 4);
    std::vector<int> pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = label(rng);
      truth[i] = label(rng);
    }
    const double ri = rand_index(pred, truth);
    EXPECT_DOUBLE_EQ(ri, oracle::rand_index(pred, truth));
    EXPECT_DOUBLE_EQ(ri, rand_index(truth, pred));
    EXPECT_GE(ri, 0.0);
    EXPECT_LE(ri, 1.0);
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> renamed(n);
    for (std::size_t i = 0; i < n; ++i) renamed[i] = perm[pred[i]] + 10;
    EXPECT_DOUBLE_EQ(rand_index(renamed, truth), ri);
  }
}

TEST(RandIndex, InvalidInputs) {
  const std::vector<int> one{0};
  const std::vector<int> two{0, 1};
  const std::vector<int> three{0, 1, 1};
  EXPECT_THROW(rand_index(one, one), InputError);
  EXPECT_THROW(rand_index(two, three), InputError);
}
