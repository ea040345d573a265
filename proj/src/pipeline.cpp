#include "ssshapelets/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>

#include "ssshapelets/candidates.hpp"
#include "ssshapelets/chain.hpp"
#include "ssshapelets/error.hpp"
#include "ssshapelets/parallel.hpp"
#include "ssshapelets/random.hpp"

namespace ssshapelets {
namespace {

using Clock = std::chrono::steady_clock;

class StageClock {
 public:
  explicit StageClock(std::map<std::string, double>& sink) : sink_(sink) {}

  // Runs fn, adds its wall time to `name`, and tags escaping errors with the
  // stage name.
  template <typename Fn>
  auto operator()(const std::string& name, Fn&& fn) {
    const auto start = Clock::now();
    struct Record {
      std::map<std::string, double>& sink;
      const std::string& name;
      Clock::time_point start;
      ~Record() {
        sink[name] += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      }
    } record{sink_, name, start};
    try {
      return fn();
    } catch (const StageError&) {
      throw;
    } catch (const InputError& e) {
      throw StageError(name, ErrorKind::kInput, e.what());
    } catch (const InfeasibleError& e) {
      throw StageError(name, ErrorKind::kInfeasible, e.what());
    } catch (const std::exception& e) {
      throw StageError(name, ErrorKind::kInternal, e.what());
    }
  }

 private:
  std::map<std::string, double>& sink_;
};

// What the stages are allowed to see: the series with only the seed labels,
// and the labeled subset grown from those seeds.
struct LabeledView {
  Dataset visible;
  std::vector<std::size_t> labeled_ids;
  LabeledSubset subset;
  std::vector<TimeSeries> members;
  std::vector<int> member_classes;  // dense over the classes present
  int present_classes = 0;
};

LabeledView prepare(const Dataset& dataset,
                    std::span<const std::size_t> labeled_ids) {
  if (labeled_ids.empty()) throw InputError("no labeled series given");
  LabeledView v;
  v.labeled_ids.assign(labeled_ids.begin(), labeled_ids.end());
  std::sort(v.labeled_ids.begin(), v.labeled_ids.end());
  v.labeled_ids.erase(std::unique(v.labeled_ids.begin(), v.labeled_ids.end()),
                      v.labeled_ids.end());
  v.visible = dataset.with_labels_only(v.labeled_ids);
  std::map<std::size_t, int> seeds;
  for (std::size_t id : v.labeled_ids) {
    const auto& label = v.visible[id].label;
    if (!label) throw InputError("labeled series " + std::to_string(id) + " has no label");
    seeds[id] = *label;
  }
  v.subset = propagate(v.visible, seeds);
  std::map<int, int> dense;
  for (std::size_t id : v.subset.members) {
    v.members.push_back(v.visible[id]);
    const int label = v.subset.label_of.at(id);
    v.member_classes.push_back(
        dense.try_emplace(label, static_cast<int>(dense.size())).first->second);
  }
  v.present_classes = static_cast<int>(dense.size());
  return v;
}

// Candidate shapelets for one (k, length) pair with their scatter matrices on
// the labeled subset.
struct CandidateStage {
  CandidateSet candidates;
  ScatterPair scatter;
};

CandidateStage score_candidates(const LabeledView& view, const CandidatePool& pool,
                                std::size_t k, const PipelineConfig& config,
                                StageClock& clock) {
  CandidateStage out;
  out.candidates = clock("consolidate", [&] {
    return consolidate(pool, k, config.beta, stream_seed(config.seed, "kmeans"));
  });
  out.scatter = clock("lds", [&] {
    const std::vector<Shapelet> shapelets = out.candidates.shapelets();
    const RepresentationMatrix h = transform(shapelets, view.members);
    return scatter(h, view.member_classes, view.present_classes);
  });
  return out;
}

struct CellOutcome {
  Selection selection;
  std::vector<Shapelet> shapelets;
  RepresentationMatrix representation;
  Assignment assignment;
  double search_score = 0.0;
  double trace_ratio = 0.0;
};

CellOutcome evaluate_cell(const LabeledView& view, const CandidateStage& stage,
                          std::size_t k, double lambda,
                          const PipelineConfig& config, StageClock& clock) {
  CellOutcome out;
  out.selection = clock("lds", [&] {
    return select_shapelets(stage.scatter, lambda, k);
  });
  out.trace_ratio = trace_ratio(stage.scatter, out.selection.indices);
  for (std::size_t i : out.selection.indices) {
    out.shapelets.push_back(Shapelet{stage.candidates.centroids[i], std::nullopt, 0});
  }
  out.representation = clock("transform", [&] {
    return transform(out.shapelets, view.visible);
  });
  out.assignment = clock("cluster", [&] {
    const AffinityMatrix a = rbf_affinity(out.representation, config.kernel_gamma);
    return spectral_cluster(a, static_cast<std::size_t>(view.visible.num_classes()),
                            stream_seed(config.seed, "spectral-kmeans"));
  });
  if (view.subset.size() < 2) {
    out.search_score = 1.0;
  } else {
    std::vector<int> pred;
    for (std::size_t id : view.subset.members) pred.push_back(out.assignment.cluster_of[id]);
    out.search_score = rand_index(pred, view.subset.member_labels());
  }
  return out;
}

void warn_selection(const Selection& s) {
  if (s.non_positive > 0) {
    std::clog << "warning: " << s.non_positive
              << " selected shapelet(s) have a non-positive discriminant score\n";
  }
}

ClusteringResult assemble(const Dataset& dataset, const LabeledView& view,
                          const PipelineConfig& config, CellOutcome cell,
                          std::map<std::string, double> timings) {
  ClusteringResult r;
  r.config = config;
  r.labeled_ids = view.labeled_ids;
  r.subset = view.subset;
  r.pseudo_labeled_count = view.subset.propagated_count();
  for (std::size_t i : cell.selection.indices) {
    r.gamma_diagonal.push_back(cell.selection.gamma_diagonal(static_cast<Eigen::Index>(i)));
  }
  r.shapelets = std::move(cell.shapelets);
  r.representation = std::move(cell.representation);
  r.assignment = std::move(cell.assignment);
  r.search_score = cell.search_score;
  r.trace_ratio = cell.trace_ratio;
  r.rand_index = rand_index(r.assignment.cluster_of, dataset.labels());
  r.timings_ms = std::move(timings);
  return r;
}

}  // namespace

void PipelineConfig::validate(std::size_t series_length) const {
  if (k < 1) throw InputError("shapelet count must be at least 1");
  if (length < 1) throw InputError("shapelet length must be at least 1");
  if (length > series_length) {
    throw InfeasibleError("shapelet length " + std::to_string(length) +
                          " exceeds series length " + std::to_string(series_length));
  }
  if (!(lambda >= 0.0)) throw InputError("lambda must be non-negative");
  if (beta < 1) throw InputError("beta must be at least 1");
  if (!(supervision_fraction > 0.0 && supervision_fraction <= 1.0)) {
    throw InputError("supervision fraction must be in (0, 1]");
  }
  if (!(kernel_gamma > 0.0)) throw InputError("kernel gamma must be positive");
}

std::size_t length_from_fraction(std::size_t series_length, double fraction) {
  if (!(fraction > 0.0)) throw InputError("length fraction must be positive");
  const long rounded = std::lround(static_cast<double>(series_length) * fraction);
  return static_cast<std::size_t>(std::max(1L, rounded));
}

std::vector<std::size_t> sample_labels(const Dataset& dataset, double fraction,
                                       std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InputError("supervision fraction must be in (0, 1]");
  }
  const std::size_t n = dataset.size();
  const std::vector<int> labels = dataset.labels();
  // The epsilon keeps products like 0.05 * 200 from rounding up to 11.
  const auto budget = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(n) - 1e-9));
  const auto c = static_cast<std::size_t>(dataset.num_classes());
  if (budget < c) {
    throw InputError("supervision budget of " + std::to_string(budget) +
                     " series cannot cover " + std::to_string(c) + " classes");
  }
  Rng rng(seed);
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> picked;
  for (std::size_t cls = 0; cls < c; ++cls) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(labels[i]) == cls) members.push_back(i);
    }
    if (members.empty()) continue;
    const std::size_t id = members[rng.below(members.size())];
    taken[id] = true;
    picked.push_back(id);
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) rest.push_back(i);
  }
  // Partial Fisher-Yates over the untaken ids.
  for (std::size_t i = 0; picked.size() < budget && i < rest.size(); ++i) {
    const std::size_t j = i + rng.below(rest.size() - i);
    std::swap(rest[i], rest[j]);
    picked.push_back(rest[i]);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

ClusteringResult run_pipeline(const Dataset& dataset,
                              const PipelineConfig& config,
                              std::span<const std::size_t> labeled_ids) {
  std::map<std::string, double> timings;
  StageClock clock(timings);
  clock("config", [&] { config.validate(dataset.series_length()); });
  const LabeledView view = clock("propagate", [&] { return prepare(dataset, labeled_ids); });
  const CandidatePool pool = clock("chain", [&] {
    return extract_pool(view.subset, view.visible, config.length, config.k);
  });
  const CandidateStage stage = score_candidates(view, pool, config.k, config, clock);
  CellOutcome cell = evaluate_cell(view, stage, config.k, config.lambda, config, clock);
  warn_selection(cell.selection);
  return assemble(dataset, view, config, std::move(cell), std::move(timings));
}

std::vector<std::size_t> length_grid(std::size_t series_length,
                                     std::span<const std::size_t> divisors) {
  std::vector<std::size_t> out;
  for (std::size_t d : divisors) {
    if (d == 0) throw InputError("length divisor must be positive");
    const long rounded = std::lround(static_cast<double>(series_length) / static_cast<double>(d));
    out.push_back(static_cast<std::size_t>(std::max(2L, rounded)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClusteringResult grid_search(const Dataset& dataset,
                             std::span<const std::size_t> labeled_ids,
                             const PipelineConfig& base, const SearchGrid& grid) {
  if (grid.ks.empty() || grid.length_divisors.empty() || grid.lambdas.empty()) {
    throw InputError("search grid has an empty axis");
  }
  std::map<std::string, double> timings;
  StageClock clock(timings);
  const std::size_t l = dataset.series_length();
  const LabeledView view = clock("propagate", [&] { return prepare(dataset, labeled_ids); });
  const std::size_t k_max = *std::max_element(grid.ks.begin(), grid.ks.end());

  struct Best {
    PipelineConfig config;
    CellOutcome cell;
  };
  std::optional<Best> best;
  std::vector<SearchCell> trace;
  auto better = [](const SearchCell& a, const SearchCell& b) {
    if (a.search_score != b.search_score) return a.search_score > b.search_score;
    if (a.trace_ratio != b.trace_ratio) return a.trace_ratio > b.trace_ratio;
    if (a.k != b.k) return a.k < b.k;
    if (a.length != b.length) return a.length < b.length;
    return a.lambda < b.lambda;
  };
  SearchCell best_cell;

  for (std::size_t length : length_grid(l, grid.length_divisors)) {
    const std::size_t feasible = std::min(k_max, max_chain_size(l, length));
    if (feasible == 0) continue;
    // One table fill per member covers every chain size.
    std::vector<std::vector<SalientChain>> chains(view.members.size());
    clock("chain", [&] {
      parallel_for(chains.size(), [&](std::size_t i) {
        chains[i] = find_chains(view.members[i].values, length, feasible);
      });
    });
    for (std::size_t k : grid.ks) {
      PipelineConfig config = base;
      config.k = k;
      config.length = length;
      const std::size_t size = std::min(k, feasible);
      std::vector<SalientChain> picked;
      for (const auto& per_member : chains) picked.push_back(per_member[size - 1]);
      const CandidatePool pool = pool_from_chains(view.subset, view.visible, length, picked);
      const CandidateStage stage = score_candidates(view, pool, k, config, clock);
      for (double lambda : grid.lambdas) {
        config.lambda = lambda;
        if (k > stage.candidates.gamma()) continue;
        CellOutcome cell = evaluate_cell(view, stage, k, lambda, config, clock);
        const SearchCell entry{k, length, lambda, cell.search_score, cell.trace_ratio};
        trace.push_back(entry);
        if (!best || better(entry, best_cell)) {
          best_cell = entry;
          best = Best{config, std::move(cell)};
        }
      }
    }
  }
  if (!best) {
    throw StageError("grid-search", ErrorKind::kInfeasible, "every grid cell is infeasible");
  }
  std::sort(trace.begin(), trace.end(), [](const SearchCell& a, const SearchCell& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.length != b.length) return a.length < b.length;
    return a.lambda < b.lambda;
  });
  warn_selection(best->cell.selection);
  ClusteringResult r = assemble(dataset, view, best->config, std::move(best->cell),
                                std::move(timings));
  r.search_trace = std::move(trace);
  return r;
}

BaselineResult raw_spectral_baseline(const Dataset& dataset, double kernel_gamma,
                                     std::uint64_t seed) {
  RepresentationMatrix raw;
  raw.entries.resize(static_cast<Eigen::Index>(dataset.series_length()),
                     static_cast<Eigen::Index>(dataset.size()));
  for (const TimeSeries& s : dataset.series()) {
    raw.entries.col(static_cast<Eigen::Index>(s.id)) =
        Eigen::Map<const Eigen::VectorXd>(s.values.data(),
                                          static_cast<Eigen::Index>(s.values.size()));
  }
  BaselineResult out;
  out.assignment = spectral_cluster(rbf_affinity(raw, kernel_gamma),
                                    static_cast<std::size_t>(dataset.num_classes()),
                                    stream_seed(seed, "spectral-kmeans"));
  out.rand_index = rand_index(out.assignment.cluster_of, dataset.labels());
  return out;
}

Quartiles quartiles(std::vector<double> values) {
  if (values.empty()) throw InputError("quartiles of an empty sample");
  std::sort(values.begin(), values.end());
  auto at = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  return {at(0.25), at(0.5), at(0.75)};
}

}  // namespace ssshapelets
