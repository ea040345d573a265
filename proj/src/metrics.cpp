#include "ssshapelets/metrics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ssshapelets/error.hpp"
#include "ssshapelets/parallel.hpp"

namespace ssshapelets {

double euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("euclidean: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

WindowMatch best_match(std::span<const double> shapelet,
                       std::span<const double> series) {
  const std::size_t len = shapelet.size();
  if (len == 0) throw InputError("shapelet is empty");
  if (len > series.size()) throw InputError("shapelet longer than series");
  WindowMatch best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i + len <= series.size(); ++i) {
    const double d = euclidean(shapelet, series.subspan(i, len));
    if (d < best.distance) best = {d, i};
  }
  return best;
}

double shapelet_distance(const Shapelet& s, const TimeSeries& x) {
  return best_match(s.values, x.values).distance;
}

RepresentationMatrix transform(std::span<const Shapelet> shapelets,
                               std::span<const TimeSeries> series) {
  RepresentationMatrix out;
  out.entries.resize(static_cast<Eigen::Index>(shapelets.size()),
                     static_cast<Eigen::Index>(series.size()));
  parallel_for(series.size(), [&](std::size_t j) {
    for (std::size_t i = 0; i < shapelets.size(); ++i) {
      out.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          shapelet_distance(shapelets[i], series[j]);
    }
  });
  return out;
}

RepresentationMatrix transform(std::span<const Shapelet> shapelets,
                               const Dataset& dataset) {
  return transform(shapelets, dataset.series());
}

std::string RepresentationMatrix::to_csv(
    std::span<const std::size_t> series_ids) const {
  if (series_ids.size() != col_count()) {
    throw InputError("to_csv: one series id per column required");
  }
  std::ostringstream out;
  out.precision(17);
  out << "shapelet";
  for (std::size_t id : series_ids) out << ',' << id;
  out << '\n';
  for (Eigen::Index r = 0; r < entries.rows(); ++r) {
    out << r;
    for (Eigen::Index c = 0; c < entries.cols(); ++c) out << ',' << entries(r, c);
    out << '\n';
  }
  return out.str();
}

PairConfusion pair_confusion(std::span<const int> pred,
                             std::span<const int> truth) {
  if (pred.size() != truth.size()) throw InputError("rand_index: length mismatch");
  if (pred.size() < 2) throw InputError("rand_index: need at least two items");
  PairConfusion c;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = i + 1; j < pred.size(); ++j) {
      const bool same_cluster = pred[i] == pred[j];
      const bool same_class = truth[i] == truth[j];
      if (same_cluster && same_class) ++c.tp;
      else if (!same_cluster && !same_class) ++c.tn;
      else if (same_cluster) ++c.fp;
      else ++c.fn;
    }
  }
  return c;
}

double rand_index(std::span<const int> pred, std::span<const int> truth) {
  const PairConfusion c = pair_confusion(pred, truth);
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

}  // namespace ssshapelets
