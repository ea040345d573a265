#include <gtest/gtest.h>

#include "ssshapelets/error.hpp"
#include "ssshapelets/serialize.hpp"

using namespace ssshapelets;
using nlohmann::ordered_json;

TEST(Serialize, CandidateSetRoundTrip) {
  CandidateSet set;
  set.window = 3;
  set.seed = 1234567890123ULL;
  set.centroids = {{0.1, -2.5, 1e-17}, {3.0, 0.3333333333333333, -0.0}};
  const std::string text = to_json(set).dump();
  const CandidateSet back = candidate_set_from_json(ordered_json::parse(text));
  EXPECT_EQ(back.window, set.window);
  EXPECT_EQ(back.seed, set.seed);
  EXPECT_EQ(back.centroids, set.centroids);
  EXPECT_EQ(to_json(back).dump(), text);
}

TEST(Serialize, CandidateSetRejectsInconsistentDocuments) {
  EXPECT_THROW(candidate_set_from_json(ordered_json::parse(
                   R"({"gamma":2,"window":2,"seed":0,"centroids":[[1,2]]})")),
               InputError);
  EXPECT_THROW(candidate_set_from_json(ordered_json::parse(
                   R"({"gamma":1,"window":3,"seed":0,"centroids":[[1,2]]})")),
               InputError);
  EXPECT_THROW(candidate_set_from_json(ordered_json::parse(R"({"window":3})")), InputError);
}

TEST(Serialize, LabeledSubsetRecordsOrigins) {
  LabeledSubset s;
  s.members = {1, 4};
  s.label_of = {{1, 0}, {4, 0}};
  s.origin_of = {{1, LabelOrigin{}}, {4, LabelOrigin{1}}};
  const ordered_json doc = to_json(s);
  EXPECT_EQ(doc.dump(),
            R"({"members":[{"id":1,"label":0,"origin":"given"},)"
            R"({"id":4,"label":0,"origin":{"propagated_from":1}}]})");
}

TEST(Serialize, ChainAndSelection) {
  const SalientChain chain{{0, 5, 11}, 2.5};
  EXPECT_EQ(to_json(chain).dump(), R"({"starts":[0,5,11],"salience":2.5})");
  Selection sel;
  sel.indices = {2, 0};
  sel.lambda = 0.1;
  sel.objective = 3.0;
  sel.gamma_diagonal = Eigen::Vector3d(1.0, -1.0, 2.0);
  EXPECT_EQ(to_json(sel).dump(),
            R"({"indices":[2,0],"lambda":0.1,"objective":3.0,"gamma_diagonal":[1.0,-1.0,2.0]})");
}

TEST(Serialize, ResultDocumentLayout) {
  const Dataset ds({{0, 0, {1.0, 2.0}}, {1, 1, {2.0, 1.0}}}, 2);
  ClusteringResult r;
  r.assignment.cluster_of = {1, 0};
  r.shapelets = {{{0.5}, std::nullopt, 0}};
  r.gamma_diagonal = {0.25};
  r.rand_index = 1.0;
  r.labeled_ids = {0, 1};
  r.timings_ms = {{"cluster", 1.5}};
  const ordered_json doc = to_json(ds, r, false);
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"dataset", "config", "labeled_ids",
                                            "pseudo_labeled_count", "shapelets",
                                            "assignment", "rand_index", "search_score",
                                            "trace_ratio", "search_trace"}));
  EXPECT_EQ(doc["dataset"].dump(), R"({"n":2,"c":2,"l":2})");
  EXPECT_EQ(doc["shapelets"][0]["gamma_diag"].get<double>(), 0.25);
  EXPECT_TRUE(to_json(ds, r, true).contains("timings_ms"));
}
