#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ssshapelets/metrics.hpp"

namespace ssshapelets {

struct AffinityMatrix {
  Eigen::MatrixXd entries;
  double kernel_gamma = 1.0;
};

// exp(-kernel_gamma * ||h_i - h_j||^2) between representation columns.
AffinityMatrix rbf_affinity(const RepresentationMatrix& reps,
                            double kernel_gamma = 1.0);

struct SpectralEmbedding {
  Eigen::VectorXd eigenvalues;   // the `clusters` smallest, ascending
  Eigen::MatrixXd eigenvectors;  // columns pair with eigenvalues
  Eigen::MatrixXd rows;          // eigenvector rows, L2-normalized
};

// I - D^-1/2 A D^-1/2.
Eigen::MatrixXd normalized_laplacian(const AffinityMatrix& affinity);

SpectralEmbedding spectral_embedding(const AffinityMatrix& affinity,
                                     std::size_t clusters);

struct Assignment {
  std::vector<int> cluster_of;
  std::size_t empty_clusters = 0;
};

// Normalized-cut spectral clustering: embedding rows clustered by seeded
// k-means (10 restarts).
Assignment spectral_cluster(const AffinityMatrix& affinity,
                            std::size_t clusters, std::uint64_t seed);

}  // namespace ssshapelets
