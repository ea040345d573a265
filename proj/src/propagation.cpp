#include "ssshapelets/propagation.hpp"

#include <limits>

#include "ssshapelets/error.hpp"
#include "ssshapelets/metrics.hpp"
#include "ssshapelets/parallel.hpp"

namespace ssshapelets {

std::size_t LabeledSubset::propagated_count() const {
  std::size_t count = 0;
  for (const auto& [id, origin] : origin_of) count += origin.given() ? 0 : 1;
  return count;
}

std::vector<int> LabeledSubset::member_labels() const {
  std::vector<int> out;
  out.reserve(members.size());
  for (std::size_t id : members) out.push_back(label_of.at(id));
  return out;
}

double whole_series_distance(const TimeSeries& a, const TimeSeries& b) {
  return euclidean(a.values, b.values);
}

NeighbourTable nearest_neighbours(const Dataset& dataset) {
  const std::size_t n = dataset.size();
  if (n < 2) throw InputError("nearest neighbours need at least two series");
  NeighbourTable table;
  table.neighbour.assign(n, 0);
  table.distance.assign(n, std::numeric_limits<double>::infinity());
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = whole_series_distance(dataset[i], dataset[j]);
      if (d < table.distance[i]) {
        table.distance[i] = d;
        table.neighbour[i] = j;
      }
    }
  });
  return table;
}

LabeledSubset propagate(const Dataset& dataset,
                        const std::map<std::size_t, int>& seeds) {
  if (seeds.empty()) throw InputError("propagation needs at least one seed");
  LabeledSubset subset;
  for (const auto& [id, label] : seeds) {
    if (id >= dataset.size()) throw InputError("seed id out of range");
    subset.label_of[id] = label;
    subset.origin_of[id] = LabelOrigin{};
  }
  if (dataset.size() >= 2) {
    const NeighbourTable nn = nearest_neighbours(dataset);
    std::vector<std::size_t> frontier;
    for (const auto& [id, label] : seeds) frontier.push_back(id);

    // Only members added in the previous round can offer new labels, since
    // nearest neighbours never change.
    while (!frontier.empty()) {
      struct Offer {
        std::size_t from;
        double distance;
      };
      std::map<std::size_t, Offer> offers;
      for (std::size_t member : frontier) {
        const std::size_t target = nn.neighbour[member];
        if (subset.label_of.contains(target)) continue;
        const Offer offer{member, nn.distance[member]};
        auto [it, inserted] = offers.try_emplace(target, offer);
        if (!inserted && (offer.distance < it->second.distance ||
                          (offer.distance == it->second.distance &&
                           offer.from < it->second.from))) {
          it->second = offer;
        }
      }
      frontier.clear();
      for (const auto& [target, offer] : offers) {
        subset.label_of[target] = subset.label_of.at(offer.from);
        subset.origin_of[target] = LabelOrigin{offer.from};
        frontier.push_back(target);
      }
    }
  }
  for (const auto& [id, label] : subset.label_of) subset.members.push_back(id);
  return subset;
}

}  // namespace ssshapelets
