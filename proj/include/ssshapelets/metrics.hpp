#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ssshapelets/data_io.hpp"

namespace ssshapelets {

struct Shapelet {
  std::vector<double> values;
  // Unset for k-means centroids, which belong to no single series.
  std::optional<std::size_t> source_series;
  std::size_t start = 0;

  std::size_t length() const { return values.size(); }
};

// Distance of each shapelet (row) to each series (column).
struct RepresentationMatrix {
  Eigen::MatrixXd entries;

  std::size_t row_count() const { return static_cast<std::size_t>(entries.rows()); }
  std::size_t col_count() const { return static_cast<std::size_t>(entries.cols()); }

  // Rows are shapelets, header row lists the series ids.
  std::string to_csv(std::span<const std::size_t> series_ids) const;
};

struct PairConfusion {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + tn + fp + fn; }
};

double euclidean(std::span<const double> a, std::span<const double> b);

struct WindowMatch {
  double distance = 0.0;
  std::size_t offset = 0;  // first minimizing window start
};

// Minimum Euclidean distance between `shapelet` and any equal-length window of
// `series`, scanning every window.
WindowMatch best_match(std::span<const double> shapelet,
                       std::span<const double> series);

double shapelet_distance(const Shapelet& s, const TimeSeries& x);

RepresentationMatrix transform(std::span<const Shapelet> shapelets,
                               std::span<const TimeSeries> series);
RepresentationMatrix transform(std::span<const Shapelet> shapelets,
                               const Dataset& dataset);

PairConfusion pair_confusion(std::span<const int> pred,
                             std::span<const int> truth);

// (TP + TN) / all unordered pairs.
double rand_index(std::span<const int> pred, std::span<const int> truth);

}  // namespace ssshapelets
