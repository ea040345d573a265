#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ssshapelets/cluster.hpp"
#include "ssshapelets/data_io.hpp"
#include "ssshapelets/lds.hpp"
#include "ssshapelets/metrics.hpp"
#include "ssshapelets/propagation.hpp"

namespace ssshapelets {

struct PipelineConfig {
  std::size_t k = 3;            // shapelet count
  std::size_t length = 0;       // shapelet length in samples
  double lambda = 0.1;          // within-class scatter weight
  std::size_t beta = 2;         // candidates per shapelet
  double supervision_fraction = 0.05;
  double kernel_gamma = 1.0;
  std::uint64_t seed = 0;       // master seed

  // Throws InputError / InfeasibleError against a series length.
  void validate(std::size_t series_length) const;
};

// Shapelet length for a fraction of the series length, at least 1.
std::size_t length_from_fraction(std::size_t series_length, double fraction);

struct SearchCell {
  std::size_t k = 0;
  std::size_t length = 0;
  double lambda = 0.0;
  double search_score = 0.0;
  double trace_ratio = 0.0;
};

struct ClusteringResult {
  Assignment assignment;
  std::vector<Shapelet> shapelets;
  std::vector<double> gamma_diagonal;  // one per selected shapelet
  RepresentationMatrix representation;  // k x n
  double rand_index = 0.0;
  double search_score = 0.0;  // rand index on the labeled subset
  double trace_ratio = 0.0;   // between/within scatter of the labeled subset
  PipelineConfig config;
  std::vector<std::size_t> labeled_ids;
  LabeledSubset subset;
  std::size_t pseudo_labeled_count = 0;
  std::vector<SearchCell> search_trace;
  std::map<std::string, double> timings_ms;
};

// ceil(fraction * n) ids, one per class first then uniform without
// replacement from the rest; returned ascending. Throws InputError if the
// budget cannot cover every class.
std::vector<std::size_t> sample_labels(const Dataset& dataset, double fraction,
                                       std::uint64_t seed);

// Full pipeline for one configuration. Only the labels of `labeled_ids` are
// visible to the stages; ground truth is used for the final rand index alone.
ClusteringResult run_pipeline(const Dataset& dataset,
                              const PipelineConfig& config,
                              std::span<const std::size_t> labeled_ids);

struct SearchGrid {
  std::vector<std::size_t> ks{2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<std::size_t> length_divisors{30, 25, 20, 15, 10};
  std::vector<double> lambdas{0.1, 1.0, 10.0};
};

// round(l / d) for each divisor, at least 2, deduplicated, ascending.
std::vector<std::size_t> length_grid(std::size_t series_length,
                                     std::span<const std::size_t> divisors);

// Runs every grid cell and keeps the one with the best rand index on the
// labeled subset. That score saturates quickly on small subsets, so ties go to
// the larger between/within scatter ratio of the selected shapelets on the
// labeled subset, then to smaller k, length and lambda. `base` supplies beta,
// kernel_gamma and the seed.
ClusteringResult grid_search(const Dataset& dataset,
                             std::span<const std::size_t> labeled_ids,
                             const PipelineConfig& base,
                             const SearchGrid& grid = {});

// Spectral clustering directly on the z-normalized series.
struct BaselineResult {
  Assignment assignment;
  double rand_index = 0.0;
};
BaselineResult raw_spectral_baseline(const Dataset& dataset,
                                     double kernel_gamma, std::uint64_t seed);

struct Quartiles {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};
// Linear-interpolated quartiles; values must be nonempty.
Quartiles quartiles(std::vector<double> values);

}  // namespace ssshapelets
