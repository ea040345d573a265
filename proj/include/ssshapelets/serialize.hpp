#pragma once

#include "json.hpp"

#include "ssshapelets/candidates.hpp"
#include "ssshapelets/chain.hpp"
#include "ssshapelets/data_io.hpp"
#include "ssshapelets/lds.hpp"
#include "ssshapelets/pipeline.hpp"
#include "ssshapelets/propagation.hpp"

namespace ssshapelets {

nlohmann::ordered_json to_json(const LabeledSubset& subset);
nlohmann::ordered_json to_json(const SalientChain& chain);
nlohmann::ordered_json to_json(const CandidateSet& candidates);
nlohmann::ordered_json to_json(const Selection& selection);
nlohmann::ordered_json to_json(const PipelineConfig& config);

// Pipeline output document. Timings are wall-clock and therefore only written
// when requested.
nlohmann::ordered_json to_json(const Dataset& dataset,
                               const ClusteringResult& result,
                               bool include_timings);

CandidateSet candidate_set_from_json(const nlohmann::ordered_json& doc);

}  // namespace ssshapelets
