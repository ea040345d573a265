#include "ssshapelets/lds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ssshapelets/error.hpp"

namespace ssshapelets {
namespace {

struct ClassMeans {
  Eigen::MatrixXd means;  // one column per class
  std::vector<std::size_t> sizes;
  Eigen::VectorXd global;
};

ClassMeans class_means(const RepresentationMatrix& h,
                       std::span<const int> labels, int num_classes) {
  const Eigen::MatrixXd& x = h.entries;
  if (labels.size() != h.col_count()) {
    throw InputError("scatter: one label per column required");
  }
  if (num_classes < 1) throw InputError("scatter: need at least one class");
  if (x.cols() == 0) throw InputError("scatter: no columns");
  ClassMeans cm;
  cm.means = Eigen::MatrixXd::Zero(x.rows(), num_classes);
  cm.sizes.assign(static_cast<std::size_t>(num_classes), 0);
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const int label = labels[static_cast<std::size_t>(j)];
    if (label < 0) throw InputError("scatter: unlabeled column");
    if (label >= num_classes) throw InputError("scatter: label out of range");
    cm.means.col(label) += x.col(j);
    ++cm.sizes[static_cast<std::size_t>(label)];
  }
  for (int c = 0; c < num_classes; ++c) {
    if (cm.sizes[static_cast<std::size_t>(c)] == 0) {
      throw InputError("scatter: class " + std::to_string(c) + " is empty");
    }
    cm.means.col(c) /= static_cast<double>(cm.sizes[static_cast<std::size_t>(c)]);
  }
  cm.global = x.rowwise().mean();
  return cm;
}

// Orders candidate indices by decreasing diagonal value, smaller index first
// on ties.
std::vector<std::size_t> rank_by_diagonal(const Eigen::VectorXd& diag) {
  std::vector<std::size_t> order(static_cast<std::size_t>(diag.size()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return diag(static_cast<Eigen::Index>(a)) > diag(static_cast<Eigen::Index>(b));
  });
  return order;
}

Selection make_selection(std::vector<std::size_t> indices,
                         const Eigen::VectorXd& diag, double lambda) {
  Selection s;
  s.lambda = lambda;
  s.gamma_diagonal = diag;
  s.objective = 0.0;
  for (std::size_t i : indices) {
    const double v = diag(static_cast<Eigen::Index>(i));
    s.objective += v;
    if (v <= 0.0) ++s.non_positive;
  }
  s.indices = std::move(indices);
  return s;
}

void check_selection(const ScatterPair& scatter, double lambda, std::size_t k) {
  const Eigen::Index gamma = scatter.between.rows();
  if (scatter.between.cols() != gamma || scatter.within.rows() != gamma ||
      scatter.within.cols() != gamma) {
    throw InputError("scatter matrices must be square and the same size");
  }
  if (lambda < 0.0) throw InputError("lambda must be non-negative");
  if (k < 1) throw InputError("must select at least one shapelet");
  if (k > static_cast<std::size_t>(gamma)) {
    throw InfeasibleError("cannot select " + std::to_string(k) + " of " +
                          std::to_string(gamma) + " candidates");
  }
}

}  // namespace

Eigen::VectorXd ScatterPair::gamma_diagonal(double lambda) const {
  return between.diagonal() - lambda * within.diagonal();
}

Eigen::MatrixXd scatter_between(const RepresentationMatrix& h,
                                std::span<const int> labels, int num_classes) {
  const ClassMeans cm = class_means(h, labels, num_classes);
  Eigen::MatrixXd sb = Eigen::MatrixXd::Zero(h.entries.rows(), h.entries.rows());
  for (int c = 0; c < num_classes; ++c) {
    const Eigen::VectorXd d = cm.means.col(c) - cm.global;
    sb.noalias() += static_cast<double>(cm.sizes[static_cast<std::size_t>(c)]) *
                    (d * d.transpose());
  }
  return sb;
}

Eigen::MatrixXd scatter_within(const RepresentationMatrix& h,
                               std::span<const int> labels, int num_classes) {
  const ClassMeans cm = class_means(h, labels, num_classes);
  Eigen::MatrixXd sw = Eigen::MatrixXd::Zero(h.entries.rows(), h.entries.rows());
  for (Eigen::Index j = 0; j < h.entries.cols(); ++j) {
    const Eigen::VectorXd d =
        h.entries.col(j) - cm.means.col(labels[static_cast<std::size_t>(j)]);
    sw.noalias() += d * d.transpose();
  }
  return sw;
}

ScatterPair scatter(const RepresentationMatrix& h, std::span<const int> labels,
                    int num_classes) {
  return {scatter_between(h, labels, num_classes),
          scatter_within(h, labels, num_classes)};
}

Eigen::MatrixXd total_scatter(const RepresentationMatrix& h) {
  const Eigen::MatrixXd centered =
      h.entries.colwise() - h.entries.rowwise().mean();
  return centered * centered.transpose();
}

Selection select_shapelets(const ScatterPair& scatter, double lambda,
                           std::size_t k) {
  check_selection(scatter, lambda, k);
  const Eigen::VectorXd diag = scatter.gamma_diagonal(lambda);
  std::vector<std::size_t> order = rank_by_diagonal(diag);
  order.resize(k);
  return make_selection(std::move(order), diag, lambda);
}

Selection brute_force_select(const ScatterPair& scatter, double lambda,
                             std::size_t k) {
  check_selection(scatter, lambda, k);
  const auto gamma = static_cast<std::size_t>(scatter.between.rows());
  double subsets = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    subsets = subsets * static_cast<double>(gamma - i) / static_cast<double>(i + 1);
  }
  if (subsets > 1e6) throw InputError("brute-force selection too large");

  // Builds Gamma in full and scores tr(W^T Gamma W) for every subset.
  const Eigen::MatrixXd g = scatter.between - lambda * scatter.within;
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  std::vector<std::size_t> best;
  double best_value = 0.0;
  for (;;) {
    double value = 0.0;
    for (std::size_t i : subset) {
      value += g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    }
    if (best.empty() || value > best_value) {
      best = subset;
      best_value = value;
    }
    // Next k-subset in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && subset[pos - 1] == gamma - k + pos - 1) --pos;
    if (pos == 0) break;
    ++subset[pos - 1];
    for (std::size_t i = pos; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
  const Eigen::VectorXd diag = g.diagonal();
  std::stable_sort(best.begin(), best.end(), [&](std::size_t a, std::size_t b) {
    return diag(static_cast<Eigen::Index>(a)) > diag(static_cast<Eigen::Index>(b));
  });
  Selection s = make_selection(std::move(best), diag, lambda);
  s.objective = best_value;
  return s;
}

double trace_ratio(const ScatterPair& scatter,
                   std::span<const std::size_t> indices) {
  double between = 0.0;
  double within = 0.0;
  for (std::size_t i : indices) {
    const auto d = static_cast<Eigen::Index>(i);
    between += scatter.between(d, d);
    within += scatter.within(d, d);
  }
  if (within > 0.0) return between / within;
  return between > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

Eigen::MatrixXd selection_matrix(const Selection& selection, std::size_t gamma) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(gamma),
      static_cast<Eigen::Index>(selection.indices.size()));
  for (std::size_t q = 0; q < selection.indices.size(); ++q) {
    w(static_cast<Eigen::Index>(selection.indices[q]), static_cast<Eigen::Index>(q)) = 1.0;
  }
  return w;
}

}  // namespace ssshapelets
