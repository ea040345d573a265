#include "ssshapelets/candidates.hpp"

#include <algorithm>
#include <limits>

#include "ssshapelets/error.hpp"
#include "ssshapelets/parallel.hpp"
#include "ssshapelets/random.hpp"

namespace ssshapelets {
namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

// k-means++: first centre uniform, then proportional to squared distance to
// the closest chosen centre. When every remaining weight is zero (duplicate
// points) the first unchosen point is taken.
std::vector<std::vector<double>> seed_centroids(
    std::span<const std::vector<double>> points, std::size_t clusters,
    Rng& rng) {
  const std::size_t n = points.size();
  std::vector<std::vector<double>> centroids;
  std::vector<bool> chosen(n, false);
  std::vector<double> closest(n, std::numeric_limits<double>::infinity());
  std::size_t pick = rng.below(n);
  for (;;) {
    chosen[pick] = true;
    centroids.push_back(points[pick]);
    if (centroids.size() == clusters) break;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      closest[i] = std::min(closest[i], squared_distance(points[i], points[pick]));
      if (!chosen[i]) total += closest[i];
    }
    if (total > 0.0) {
      const double target = rng.unit() * total;
      double acc = 0.0;
      std::size_t last_positive = n;
      pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i] || closest[i] <= 0.0) continue;
        last_positive = i;
        acc += closest[i];
        if (acc > target) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = last_positive;
    } else {
      pick = static_cast<std::size_t>(
          std::find(chosen.begin(), chosen.end(), false) - chosen.begin());
    }
  }
  return centroids;
}

KMeansResult lloyd(std::span<const std::vector<double>> points,
                   std::vector<std::vector<double>> centroids,
                   std::size_t max_iterations) {
  const std::size_t n = points.size();
  const std::size_t k = centroids.size();
  const std::size_t dim = points.front().size();
  KMeansResult r;
  r.assignment.assign(n, k);  // k marks "unassigned"
  std::vector<double> dist(n, 0.0);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = squared_distance(points[i], centroids[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      dist[i] = best_d;
      if (r.assignment[i] != best) {
        r.assignment[i] = best;
        changed = true;
      }
    }
    r.iterations = iter + 1;
    if (!changed) break;

    std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = sums[r.assignment[i]];
      for (std::size_t d = 0; d < dim; ++d) s[d] += points[i][d];
      ++counts[r.assignment[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (std::size_t d = 0; d < dim; ++d) {
        centroids[c][d] = sums[c][d] / static_cast<double>(counts[c]);
      }
    }
    // Empty clusters take the point farthest from its current centroid.
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[r.assignment[i]] <= 1) continue;
        const double d = squared_distance(points[i], centroids[r.assignment[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      if (far_d < 0.0) continue;
      --counts[r.assignment[far]];
      r.assignment[far] = c;
      counts[c] = 1;
      centroids[c] = points[far];
    }
  }
  r.inertia = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r.inertia += squared_distance(points[i], centroids[r.assignment[i]]);
  }
  r.centroids = std::move(centroids);
  return r;
}

}  // namespace

std::vector<Shapelet> CandidateSet::shapelets() const {
  std::vector<Shapelet> out;
  out.reserve(centroids.size());
  for (const auto& c : centroids) out.push_back(Shapelet{c, std::nullopt, 0});
  return out;
}

CandidatePool pool_from_chains(const LabeledSubset& subset,
                               const Dataset& dataset, std::size_t window,
                               std::span<const SalientChain> chains) {
  if (chains.size() != subset.members.size()) {
    throw InputError("one chain per labeled member required");
  }
  CandidatePool pool;
  pool.window = window;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const TimeSeries& x = dataset[subset.members[i]];
    for (std::size_t start : chains[i].starts) {
      const auto first = x.values.begin() + static_cast<std::ptrdiff_t>(start);
      pool.subsequences.push_back(Shapelet{
          std::vector<double>(first, first + static_cast<std::ptrdiff_t>(window)),
          x.id, start});
    }
  }
  return pool;
}

CandidatePool extract_pool(const LabeledSubset& subset, const Dataset& dataset,
                           std::size_t window, std::size_t chain_size) {
  if (subset.members.empty()) throw InputError("labeled subset is empty");
  if (chain_size < 1) throw InputError("chain size must be at least 1");
  const std::size_t size =
      std::min(chain_size, max_chain_size(dataset.series_length(), window));
  if (size == 0) {
    throw InfeasibleError("subsequence length exceeds series length");
  }
  std::vector<SalientChain> chains(subset.members.size());
  parallel_for(chains.size(), [&](std::size_t i) {
    chains[i] = find_chain(dataset[subset.members[i]], window, size);
  });
  return pool_from_chains(subset, dataset, window, chains);
}

KMeansResult kmeans(std::span<const std::vector<double>> points,
                    std::size_t clusters, std::uint64_t seed,
                    const KMeansOptions& options) {
  if (clusters < 1) throw InputError("kmeans: need at least one cluster");
  if (clusters > points.size()) {
    throw InputError("kmeans: more clusters than points");
  }
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("kmeans: points differ in dimension");
  }
  Rng rng(seed);
  KMeansResult best;
  for (std::size_t run = 0; run < std::max<std::size_t>(1, options.restarts); ++run) {
    KMeansResult r = lloyd(points, seed_centroids(points, clusters, rng),
                           options.max_iterations);
    if (run == 0 || r.inertia < best.inertia) best = std::move(r);
  }
  return best;
}

CandidateSet consolidate(const CandidatePool& pool, std::size_t k,
                         std::size_t multiplier, std::uint64_t seed) {
  if (pool.subsequences.empty()) throw InputError("candidate pool is empty");
  if (k < 1 || multiplier < 1) {
    throw InputError("shapelet count and multiplier must be positive");
  }
  std::vector<std::vector<double>> points;
  points.reserve(pool.size());
  for (const Shapelet& s : pool.subsequences) points.push_back(s.values);
  const std::size_t gamma = std::min(k * multiplier, points.size());
  CandidateSet out;
  out.window = pool.window;
  out.seed = seed;
  out.centroids = kmeans(points, gamma, seed).centroids;
  return out;
}

}  // namespace ssshapelets
