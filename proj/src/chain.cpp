#include "ssshapelets/chain.hpp"

#include <cmath>
#include <limits>

#include "ssshapelets/error.hpp"
#include "ssshapelets/metrics.hpp"

namespace ssshapelets {
namespace {

constexpr double kNoEdge = std::numeric_limits<double>::infinity();

void check_window(std::size_t series_length, std::size_t window) {
  if (window < 1) throw InputError("subsequence length must be at least 1");
  if (window > series_length) {
    throw InfeasibleError("subsequence length " + std::to_string(window) +
                          " exceeds series length " +
                          std::to_string(series_length));
  }
}

void check_chain(std::size_t series_length, std::size_t window,
                 std::size_t size) {
  check_window(series_length, window);
  if (size < 1) throw InputError("chain size must be at least 1");
  if (size > max_chain_size(series_length, window)) {
    throw InfeasibleError("a chain of " + std::to_string(size) +
                          " windows of length " + std::to_string(window) +
                          " does not fit a series of length " +
                          std::to_string(series_length));
  }
}

SalientChain trace_back(std::span<const double> series, std::size_t window,
                        const SubsequenceGraph& graph, const DpTable& table,
                        std::size_t size) {
  SalientChain chain;
  chain.starts.resize(size);
  long node = static_cast<long>(graph.sink());
  for (std::size_t j = size + 1; j >= 2; --j) {
    node = table.back(node, static_cast<Eigen::Index>(j));
    chain.starts[j - 2] = static_cast<std::size_t>(node) - 1;
  }
  chain.salience = chain_salience(series, window, chain.starts);
  return chain;
}

}  // namespace

bool SubsequenceGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::isfinite(weights(static_cast<Eigen::Index>(from),
                               static_cast<Eigen::Index>(to)));
}

std::size_t max_chain_size(std::size_t series_length, std::size_t window) {
  return window == 0 ? 0 : series_length / window;
}

SubsequenceGraph build_graph(std::span<const double> series,
                             std::size_t window) {
  check_window(series.size(), window);
  SubsequenceGraph g;
  g.window = window;
  g.m = series.size() - window + 1;
  const std::size_t m = g.m;
  const auto nodes = static_cast<Eigen::Index>(m + 2);
  g.weights = Eigen::MatrixXd::Constant(nodes, nodes, kNoEdge);
  for (std::size_t p = 1; p <= m; ++p) {
    g.weights(0, static_cast<Eigen::Index>(p)) = 0.0;
    g.weights(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(m + 1)) = 0.0;
  }
  // Squared distances along each diagonal (fixed start gap) are rolled
  // forward in O(1) per pair, so the graph costs O(m^2) rather than
  // O(m^2 * window).
  for (std::size_t gap = window; gap < m; ++gap) {
    double sq = 0.0;
    for (std::size_t i = 0; i < window; ++i) {
      const double d = series[i] - series[gap + i];
      sq += d * d;
    }
    for (std::size_t a = 0; a + gap < m; ++a) {
      if (a > 0) {
        const double out = series[a - 1] - series[a - 1 + gap];
        const double in = series[a - 1 + window] - series[a - 1 + window + gap];
        sq += in * in - out * out;
        if (sq < 0.0) sq = 0.0;
      }
      g.weights(static_cast<Eigen::Index>(a + 1),
                static_cast<Eigen::Index>(a + gap + 1)) = -std::sqrt(sq);
    }
  }
  return g;
}

DpTable fill_table(const SubsequenceGraph& graph, std::size_t max_chain) {
  const auto nodes = static_cast<Eigen::Index>(graph.node_count());
  const auto columns = static_cast<Eigen::Index>(max_chain + 2);
  DpTable t;
  t.cost = Eigen::MatrixXd::Constant(nodes, columns, kNoEdge);
  t.back = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>::Constant(
      nodes, columns, -1);
  t.cost(0, 0) = 0.0;
  // Edges only run from lower to higher node index.
  for (Eigen::Index j = 1; j < columns; ++j) {
    for (Eigen::Index p = 1; p < nodes; ++p) {
      double best = kNoEdge;
      long arg = -1;
      for (Eigen::Index a = 0; a < p; ++a) {
        const double prev = t.cost(a, j - 1);
        const double w = graph.weights(a, p);
        if (prev == kNoEdge || w == kNoEdge) continue;
        const double c = prev + w;
        if (c < best) {
          best = c;
          arg = static_cast<long>(a);
        }
      }
      t.cost(p, j) = best;
      t.back(p, j) = arg;
    }
  }
  return t;
}

double chain_salience(std::span<const double> series, std::size_t window,
                      std::span<const std::size_t> starts) {
  check_window(series.size(), window);
  for (std::size_t j = 0; j < starts.size(); ++j) {
    if (starts[j] + window > series.size()) {
      throw InputError("chain window runs past the series");
    }
    if (j > 0 && starts[j] < starts[j - 1] + window) {
      throw InputError("chain windows overlap or are out of order");
    }
  }
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < starts.size(); ++j) {
    sum += euclidean(series.subspan(starts[j], window),
                     series.subspan(starts[j + 1], window));
  }
  return sum;
}

std::vector<SalientChain> find_chains(std::span<const double> series,
                                      std::size_t window,
                                      std::size_t max_size) {
  check_chain(series.size(), window, max_size);
  const SubsequenceGraph graph = build_graph(series, window);
  const DpTable table = fill_table(graph, max_size);
  std::vector<SalientChain> chains;
  chains.reserve(max_size);
  for (std::size_t size = 1; size <= max_size; ++size) {
    chains.push_back(trace_back(series, window, graph, table, size));
  }
  return chains;
}

SalientChain find_chain(std::span<const double> series, std::size_t window,
                        std::size_t size) {
  check_chain(series.size(), window, size);
  const SubsequenceGraph graph = build_graph(series, window);
  const DpTable table = fill_table(graph, size);
  return trace_back(series, window, graph, table, size);
}

SalientChain find_chain(const TimeSeries& x, std::size_t window,
                        std::size_t size) {
  return find_chain(std::span<const double>(x.values), window, size);
}

SalientChain brute_force_chain(std::span<const double> series,
                               std::size_t window, std::size_t size) {
  check_chain(series.size(), window, size);
  const std::size_t m = series.size() - window + 1;
  // C(m, size) bounds the number of start tuples visited.
  double tuples = 1.0;
  for (std::size_t i = 0; i < size; ++i) {
    tuples = tuples * static_cast<double>(m - i) / static_cast<double>(i + 1);
  }
  if (tuples > 1e7) {
    throw InputError("brute-force chain search too large (" +
                     std::to_string(static_cast<long long>(tuples)) +
                     " tuples)");
  }

  SalientChain best;
  bool have_best = false;
  std::vector<std::size_t> starts(size);
  // Depth-first enumeration of valid chains.
  auto visit = [&](auto&& self, std::size_t depth, std::size_t first) -> void {
    if (depth == size) {
      double sum = 0.0;
      for (std::size_t j = 0; j + 1 < size; ++j) {
        sum += euclidean(series.subspan(starts[j], window),
                         series.subspan(starts[j + 1], window));
      }
      bool better = !have_best || sum > best.salience;
      if (have_best && sum == best.salience) {
        // Same tie rule as the DP: compare from the last start backwards.
        for (std::size_t j = size; j-- > 0;) {
          if (starts[j] != best.starts[j]) {
            better = starts[j] < best.starts[j];
            break;
          }
        }
      }
      if (better) {
        best.starts = starts;
        best.salience = sum;
        have_best = true;
      }
      return;
    }
    const std::size_t remaining = size - depth - 1;
    for (std::size_t s = first; s + window * remaining < m; ++s) {
      starts[depth] = s;
      self(self, depth + 1, s + window);
    }
  };
  visit(visit, 0, 0);
  return best;
}

}  // namespace ssshapelets
