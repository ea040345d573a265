#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ssshapelets/data_io.hpp"

namespace ssshapelets {

// Where a member of the labeled subset got its label.
struct LabelOrigin {
  // Unset for given (seed) labels; otherwise the member it was copied from.
  std::optional<std::size_t> propagated_from;

  bool given() const { return !propagated_from.has_value(); }
};

// Labeled plus pseudo-labeled series (D_l).
struct LabeledSubset {
  std::vector<std::size_t> members;  // ascending ids
  std::map<std::size_t, int> label_of;
  std::map<std::size_t, LabelOrigin> origin_of;

  std::size_t size() const { return members.size(); }
  std::size_t propagated_count() const;
  std::vector<int> member_labels() const;  // aligned with members
};

// Euclidean distance between two whole z-normalized series.
double whole_series_distance(const TimeSeries& a, const TimeSeries& b);

// Nearest neighbour of every series among all other series; equal distances
// resolve to the smaller id. Needs at least two series.
struct NeighbourTable {
  std::vector<std::size_t> neighbour;
  std::vector<double> distance;
};
NeighbourTable nearest_neighbours(const Dataset& dataset);

// Synchronous frontier expansion: each round, every member offers its label
// to its nearest neighbour if that neighbour is unlabeled; a neighbour offered
// several labels takes the one from the closest member (smaller member id on
// ties). Rounds repeat until no member's nearest neighbour is unlabeled.
// Labels are only read from `seeds`, never from the dataset.
LabeledSubset propagate(const Dataset& dataset,
                        const std::map<std::size_t, int>& seeds);

}  // namespace ssshapelets
