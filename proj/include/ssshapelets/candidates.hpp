#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssshapelets/chain.hpp"
#include "ssshapelets/data_io.hpp"
#include "ssshapelets/metrics.hpp"
#include "ssshapelets/propagation.hpp"

namespace ssshapelets {

// Salient windows pooled from every member of the labeled subset.
struct CandidatePool {
  std::size_t window = 0;
  std::vector<Shapelet> subsequences;

  std::size_t size() const { return subsequences.size(); }
};

struct CandidateSet {
  std::size_t window = 0;
  std::vector<std::vector<double>> centroids;
  std::uint64_t seed = 0;

  std::size_t gamma() const { return centroids.size(); }
  std::vector<Shapelet> shapelets() const;
};

// Concatenates the windows of each member's salient chain, in member order.
// If the series cannot hold `chain_size` windows, the largest feasible chain is
// used instead.
CandidatePool extract_pool(const LabeledSubset& subset, const Dataset& dataset,
                           std::size_t window, std::size_t chain_size);

// Same, from chains computed beforehand (chains[i] belongs to
// subset.members[i]).
CandidatePool pool_from_chains(const LabeledSubset& subset,
                               const Dataset& dataset, std::size_t window,
                               std::span<const SalientChain> chains);

struct KMeansOptions {
  std::size_t max_iterations = 300;
  // Independent k-means++ starts; the lowest inertia wins (first on ties).
  std::size_t restarts = 1;
};

struct KMeansResult {
  std::vector<std::vector<double>> centroids;
  std::vector<std::size_t> assignment;
  double inertia = 0.0;
  std::size_t iterations = 0;
};

// Lloyd's algorithm from k-means++ seeding with Euclidean distance. Stops at an
// assignment fixpoint or after max_iterations; an empty cluster is re-seeded
// with the point farthest from its own centroid. Deterministic for a seed.
KMeansResult kmeans(std::span<const std::vector<double>> points,
                    std::size_t clusters, std::uint64_t seed,
                    const KMeansOptions& options = {});

// gamma = min(multiplier * k, pool size) k-means centroids of the pool.
CandidateSet consolidate(const CandidatePool& pool, std::size_t k,
                         std::size_t multiplier, std::uint64_t seed);

}  // namespace ssshapelets
