#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ssshapelets/metrics.hpp"

namespace ssshapelets {

struct ScatterPair {
  Eigen::MatrixXd between;
  Eigen::MatrixXd within;

  // Diagonal of between - lambda * within.
  Eigen::VectorXd gamma_diagonal(double lambda) const;
};

// labels[j] is the class of column j of H, in [0, num_classes). Every class
// must own at least one column.
Eigen::MatrixXd scatter_between(const RepresentationMatrix& h,
                                std::span<const int> labels, int num_classes);
Eigen::MatrixXd scatter_within(const RepresentationMatrix& h,
                               std::span<const int> labels, int num_classes);
ScatterPair scatter(const RepresentationMatrix& h, std::span<const int> labels,
                    int num_classes);

// Sum over columns of (h_j - mean)(h_j - mean)^T.
Eigen::MatrixXd total_scatter(const RepresentationMatrix& h);

struct Selection {
  std::vector<std::size_t> indices;  // by decreasing diagonal, ties by index
  double objective = 0.0;
  double lambda = 0.0;
  Eigen::VectorXd gamma_diagonal;
  // How many selected candidates have a non-positive diagonal entry.
  std::size_t non_positive = 0;
};

// Picks the k candidates with the largest diagonal entries of
// S_B - lambda * S_W, which maximizes tr(W^T (S_B - lambda S_W) W) over binary
// selection matrices W.
Selection select_shapelets(const ScatterPair& scatter, double lambda,
                           std::size_t k);

// Exhaustive k-subset search of the same objective (at most 1e6 subsets).
Selection brute_force_select(const ScatterPair& scatter, double lambda,
                             std::size_t k);

// tr(W^T S_B W) / tr(W^T S_W W) for the selected candidates; +infinity when
// the selected within-class scatter vanishes but the between-class does not.
double trace_ratio(const ScatterPair& scatter,
                   std::span<const std::size_t> indices);

// gamma x k binary matrix with W(indices[q], q) = 1.
Eigen::MatrixXd selection_matrix(const Selection& selection, std::size_t gamma);

}  // namespace ssshapelets
