#include "ssshapelets/cluster.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ssshapelets/candidates.hpp"
#include "ssshapelets/error.hpp"

namespace ssshapelets {

AffinityMatrix rbf_affinity(const RepresentationMatrix& reps,
                            double kernel_gamma) {
  if (!(kernel_gamma > 0.0)) throw InputError("kernel gamma must be positive");
  const Eigen::MatrixXd& h = reps.entries;
  const Eigen::Index n = h.cols();
  AffinityMatrix a;
  a.kernel_gamma = kernel_gamma;
  a.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a.entries(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = std::exp(-kernel_gamma * (h.col(i) - h.col(j)).squaredNorm());
      a.entries(i, j) = v;
      a.entries(j, i) = v;
    }
  }
  return a;
}

Eigen::MatrixXd normalized_laplacian(const AffinityMatrix& affinity) {
  const Eigen::VectorXd degree = affinity.entries.rowwise().sum();
  if ((degree.array() <= 1e-300).any()) {
    throw InputError("affinity row with zero degree");
  }
  const Eigen::VectorXd inv_sqrt = degree.array().rsqrt();
  const Eigen::Index n = affinity.entries.rows();
  Eigen::MatrixXd l = -(inv_sqrt.asDiagonal() * affinity.entries * inv_sqrt.asDiagonal());
  l.diagonal().array() += 1.0;
  // Exact symmetry for the self-adjoint solver.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) l(j, i) = l(i, j);
  }
  return l;
}

SpectralEmbedding spectral_embedding(const AffinityMatrix& affinity,
                                     std::size_t clusters) {
  const Eigen::Index n = affinity.entries.rows();
  const auto c = static_cast<Eigen::Index>(clusters);
  if (c < 1 || c > n) throw InputError("cluster count must be in [1, n]");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      normalized_laplacian(affinity));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen-decomposition did not converge");
  }
  SpectralEmbedding e;
  e.eigenvalues = solver.eigenvalues().head(c);
  e.eigenvectors = solver.eigenvectors().leftCols(c);
  e.rows = e.eigenvectors;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = e.rows.row(i).norm();
    if (norm > 0.0) e.rows.row(i) /= norm;
  }
  return e;
}

Assignment spectral_cluster(const AffinityMatrix& affinity,
                            std::size_t clusters, std::uint64_t seed) {
  const Eigen::Index n = affinity.entries.rows();
  if (clusters < 1) throw InputError("cluster count must be positive");
  if (static_cast<Eigen::Index>(clusters) > n) {
    throw InputError("more clusters than series");
  }
  Assignment out;
  out.cluster_of.assign(static_cast<std::size_t>(n), 0);
  if (clusters == 1) return out;

  const SpectralEmbedding e = spectral_embedding(affinity, clusters);
  std::vector<std::vector<double>> points(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    points[static_cast<std::size_t>(i)].assign(e.rows.row(i).begin(),
                                               e.rows.row(i).end());
  }
  const KMeansResult km =
      kmeans(points, clusters, seed, KMeansOptions{.max_iterations = 300, .restarts = 10});
  std::vector<std::size_t> counts(clusters, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.cluster_of[i] = static_cast<int>(km.assignment[i]);
    ++counts[km.assignment[i]];
  }
  for (std::size_t c : counts) out.empty_clusters += c == 0 ? 1 : 0;
  return out;
}

}  // namespace ssshapelets
