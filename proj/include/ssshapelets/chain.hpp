#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ssshapelets/data_io.hpp"

namespace ssshapelets {

// DAG over the m = l - len + 1 windows of a series. Node 0 is the virtual
// source, nodes 1..m are windows (node i starts at offset i - 1), node m + 1 is
// the virtual sink. weights(a, b) is the weight of edge a -> b, or +infinity
// when there is no edge. Window-to-window edges require the destination to
// start at least `window` samples after the source and weigh minus the
// Euclidean distance between the windows.
struct SubsequenceGraph {
  std::size_t window = 0;
  std::size_t m = 0;
  Eigen::MatrixXd weights;

  std::size_t source() const { return 0; }
  std::size_t sink() const { return m + 1; }
  std::size_t node_count() const { return m + 2; }
  bool has_edge(std::size_t from, std::size_t to) const;
};

SubsequenceGraph build_graph(std::span<const double> series, std::size_t window);

// Accumulated shortest-path costs: cost(p, j) is the cheapest path from the
// source to node p visiting j + 1 nodes (source included); back(p, j) is the
// predecessor achieving it, or -1.
struct DpTable {
  Eigen::MatrixXd cost;
  Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> back;
};

DpTable fill_table(const SubsequenceGraph& graph, std::size_t max_chain);

struct SalientChain {
  std::vector<std::size_t> starts;  // 0-based, strictly increasing
  double salience = 0.0;
};

// Sum of distances between consecutive windows. Throws InputError if the
// starts overlap, are out of order or run past the series.
double chain_salience(std::span<const double> series, std::size_t window,
                      std::span<const std::size_t> starts);

// Largest feasible chain size for a series of the given length.
std::size_t max_chain_size(std::size_t series_length, std::size_t window);

// Most salient chain of `size` non-overlapping windows, by shortest path with
// size + 2 nodes on the negated-weight graph. Among equally salient chains the
// smallest predecessor is kept at every step, so the chain with the smallest
// last start (then second to last, and so on) wins. Throws InfeasibleError if
// size * window exceeds the series length.
SalientChain find_chain(std::span<const double> series, std::size_t window,
                        std::size_t size);
SalientChain find_chain(const TimeSeries& x, std::size_t window,
                        std::size_t size);

// Chains of every size 1..max_size from one table fill.
std::vector<SalientChain> find_chains(std::span<const double> series,
                                      std::size_t window, std::size_t max_size);

// Exhaustive search over every valid chain, same tie rule as find_chain.
// Refuses instances with more than 1e7 candidate start tuples.
SalientChain brute_force_chain(std::span<const double> series,
                               std::size_t window, std::size_t size);

}  // namespace ssshapelets
