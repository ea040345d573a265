#include "ssshapelets/serialize.hpp"

#include "ssshapelets/error.hpp"

namespace ssshapelets {

using nlohmann::ordered_json;

ordered_json to_json(const LabeledSubset& subset) {
  ordered_json members = ordered_json::array();
  for (std::size_t id : subset.members) {
    const LabelOrigin& origin = subset.origin_of.at(id);
    ordered_json m{{"id", id}, {"label", subset.label_of.at(id)}};
    m["origin"] = origin.given() ? ordered_json("given")
                                 : ordered_json{{"propagated_from", *origin.propagated_from}};
    members.push_back(std::move(m));
  }
  return ordered_json{{"members", std::move(members)}};
}

ordered_json to_json(const SalientChain& chain) {
  return ordered_json{{"starts", chain.starts}, {"salience", chain.salience}};
}

ordered_json to_json(const CandidateSet& candidates) {
  return ordered_json{{"gamma", candidates.gamma()},
                      {"window", candidates.window},
                      {"seed", candidates.seed},
                      {"centroids", candidates.centroids}};
}

CandidateSet candidate_set_from_json(const ordered_json& doc) {
  try {
    CandidateSet out;
    out.window = doc.at("window").get<std::size_t>();
    out.seed = doc.at("seed").get<std::uint64_t>();
    out.centroids = doc.at("centroids").get<std::vector<std::vector<double>>>();
    if (out.centroids.size() != doc.at("gamma").get<std::size_t>()) {
      throw InputError("candidate set: gamma does not match centroid count");
    }
    for (const auto& c : out.centroids) {
      if (c.size() != out.window) throw InputError("candidate set: centroid length mismatch");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("candidate set: ") + e.what());
  }
}

ordered_json to_json(const Selection& selection) {
  std::vector<double> diag(selection.gamma_diagonal.data(),
                           selection.gamma_diagonal.data() + selection.gamma_diagonal.size());
  return ordered_json{{"indices", selection.indices},
                      {"lambda", selection.lambda},
                      {"objective", selection.objective},
                      {"gamma_diagonal", diag}};
}

ordered_json to_json(const PipelineConfig& config) {
  return ordered_json{{"k", config.k},
                      {"length", config.length},
                      {"lambda", config.lambda},
                      {"beta", config.beta},
                      {"supervision_fraction", config.supervision_fraction},
                      {"kernel_gamma", config.kernel_gamma},
                      {"seed", config.seed}};
}

ordered_json to_json(const Dataset& dataset, const ClusteringResult& result,
                     bool include_timings) {
  ordered_json doc;
  doc["dataset"] = {{"n", dataset.size()},
                    {"c", dataset.num_classes()},
                    {"l", dataset.series_length()}};
  doc["config"] = to_json(result.config);
  doc["labeled_ids"] = result.labeled_ids;
  doc["pseudo_labeled_count"] = result.pseudo_labeled_count;
  ordered_json shapelets = ordered_json::array();
  for (std::size_t i = 0; i < result.shapelets.size(); ++i) {
    shapelets.push_back({{"values", result.shapelets[i].values},
                         {"gamma_diag", result.gamma_diagonal.at(i)}});
  }
  doc["shapelets"] = std::move(shapelets);
  doc["assignment"] = result.assignment.cluster_of;
  doc["rand_index"] = result.rand_index;
  doc["search_score"] = result.search_score;
  doc["trace_ratio"] = result.trace_ratio;
  ordered_json trace = ordered_json::array();
  for (const SearchCell& cell : result.search_trace) {
    trace.push_back({{"k", cell.k},
                     {"length", cell.length},
                     {"lambda", cell.lambda},
                     {"search_score", cell.search_score},
                     {"trace_ratio", cell.trace_ratio}});
  }
  doc["search_trace"] = std::move(trace);
  if (include_timings) doc["timings_ms"] = result.timings_ms;
  return doc;
}

}  // namespace ssshapelets
