// Command-line front end: run the clustering pipeline, extract salient chains,
// time the chain search and run the raw spectral baseline.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssshapelets/chain.hpp"
#include "ssshapelets/data_io.hpp"
#include "ssshapelets/error.hpp"
#include "ssshapelets/pipeline.hpp"
#include "ssshapelets/random.hpp"
#include "ssshapelets/serialize.hpp"

namespace {

using namespace ssshapelets;
using nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

struct DataOptions {
  std::vector<std::string> files;
  std::string delimiter = "auto";

  Dataset load() const {
    std::vector<std::filesystem::path> paths(files.begin(), files.end());
    return load_ucr(paths, parse_delimiter(delimiter));
  }
};

void add_data_options(CLI::App* cmd, DataOptions& opts) {
  cmd->add_option("--data", opts.files,
                  "UCR file(s); several files are concatenated (e.g. TRAIN and TEST)")
      ->required();
  cmd->add_option("--delimiter", opts.delimiter, "auto|comma|tab|whitespace")
      ->check(CLI::IsMember({"auto", "comma", "tab", "whitespace"}));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

struct RunOptions {
  DataOptions data;
  double supervision = 0.05;
  std::uint64_t seed = 0;
  std::size_t k = 3;
  double length_frac = 0.1;
  double lambda = 0.1;
  std::size_t beta = 2;
  double kernel_gamma = 1.0;
  bool grid = false;
  std::size_t repeats = 1;
  std::string out = "-";
  std::string emit_csv;
  bool timings = false;
};

int run_command(const RunOptions& o) {
  const Dataset dataset = o.data.load();
  PipelineConfig base;
  base.k = o.k;
  base.length = length_from_fraction(dataset.series_length(), o.length_frac);
  base.lambda = o.lambda;
  base.beta = o.beta;
  base.supervision_fraction = o.supervision;
  base.kernel_gamma = o.kernel_gamma;
  if (o.repeats < 1) throw InputError("--repeats must be at least 1");

  std::vector<ordered_json> runs;
  std::vector<double> scores;
  for (std::size_t r = 0; r < o.repeats; ++r) {
    PipelineConfig config = base;
    config.seed = o.seed + r;
    const std::vector<std::size_t> labeled = sample_labels(
        dataset, config.supervision_fraction, stream_seed(config.seed, "label-sampling"));
    const ClusteringResult result = o.grid ? grid_search(dataset, labeled, config)
                                           : run_pipeline(dataset, config, labeled);
    runs.push_back(to_json(dataset, result, o.timings));
    scores.push_back(result.rand_index);
    if (!o.emit_csv.empty()) {
      std::vector<std::size_t> ids(dataset.size());
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
      const std::string path =
          o.repeats == 1 ? o.emit_csv : o.emit_csv + "." + std::to_string(r);
      write_output(path, result.representation.to_csv(ids));
    }
  }

  ordered_json doc;
  if (o.repeats == 1) {
    doc = std::move(runs.front());
  } else {
    const Quartiles q = quartiles(scores);
    doc["dataset"] = runs.front()["dataset"];
    doc["runs"] = std::move(runs);
    doc["rand_index_summary"] = {{"median", q.median},
                                 {"q1", q.q1},
                                 {"q3", q.q3},
                                 {"iqr", q.q3 - q.q1},
                                 {"values", scores}};
  }
  write_output(o.out, doc.dump(2) + "\n");
  return 0;
}

struct ChainOptions {
  DataOptions data;
  std::size_t index = 0;
  std::size_t length = 0;
  double length_frac = 0.0;
  std::size_t k = 3;
  bool brute_force = false;
};

std::size_t window_for(std::size_t series_length, std::size_t length, double frac) {
  if (length > 0) return length;
  if (frac > 0.0) return length_from_fraction(series_length, frac);
  throw InputError("give --length or --length-frac");
}

int chain_command(const ChainOptions& o) {
  const Dataset dataset = o.data.load();
  if (o.index >= dataset.size()) throw InputError("--index out of range");
  const TimeSeries& x = dataset[o.index];
  const std::size_t window = window_for(x.length(), o.length, o.length_frac);
  const SalientChain chain = o.brute_force ? brute_force_chain(x.values, window, o.k)
                                           : find_chain(x, window, o.k);
  std::cout << to_json(chain).dump() << "\n";
  return 0;
}

struct BenchOptions {
  std::vector<std::string> files;
  std::string delimiter = "auto";
  std::size_t index = 0;
  std::size_t series_length = 1024;
  std::uint64_t seed = 0;
  std::vector<double> fracs{0.05, 0.1, 0.15, 0.2, 0.25};
  std::vector<std::size_t> ks{2, 3, 4, 5, 6};
  double brute_force_limit = 1e7;
  std::string out = "-";
};

// Random walk, z-normalized.
std::vector<double> synthetic_series(std::size_t length, std::uint64_t seed) {
  Rng rng(seed);
  RawSeries raw;
  double level = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    level += rng.unit() - 0.5;
    raw.values.push_back(level);
  }
  return znormalize(raw).values;
}

int bench_command(const BenchOptions& o) {
  std::vector<double> series;
  if (!o.files.empty()) {
    DataOptions data{o.files, o.delimiter};
    const Dataset dataset = data.load();
    if (o.index >= dataset.size()) throw InputError("--index out of range");
    series = dataset[o.index].values;
  } else {
    series = synthetic_series(o.series_length, o.seed);
  }
  const std::size_t l = series.size();
  std::string csv = "series_length,window_fraction,window,k,method,seconds,salience\n";
  auto time = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    SalientChain c = fn();
    return std::pair{std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
                     c.salience};
  };
  for (double frac : o.fracs) {
    const std::size_t window = length_from_fraction(l, frac);
    for (std::size_t k : o.ks) {
      if (k > max_chain_size(l, window)) continue;
      const auto row = [&](const char* method, std::pair<double, double> t) {
        csv += std::to_string(l) + "," + std::to_string(frac) + "," + std::to_string(window) +
               "," + std::to_string(k) + "," + method + "," + std::to_string(t.first) + "," +
               std::to_string(t.second) + "\n";
      };
      row("find_chain", time([&] { return find_chain(series, window, k); }));
      double tuples = 1.0;
      const std::size_t m = l - window + 1;
      for (std::size_t i = 0; i < k; ++i) tuples = tuples * double(m - i) / double(i + 1);
      if (tuples <= o.brute_force_limit) {
        row("brute_force", time([&] { return brute_force_chain(series, window, k); }));
      }
    }
  }
  write_output(o.out, csv);
  return 0;
}

struct BaselineOptions {
  DataOptions data;
  std::uint64_t seed = 0;
  double kernel_gamma = 1.0;
  std::size_t repeats = 1;
  std::string out = "-";
};

int baseline_command(const BaselineOptions& o) {
  const Dataset dataset = o.data.load();
  if (o.repeats < 1) throw InputError("--repeats must be at least 1");
  ordered_json runs = ordered_json::array();
  std::vector<double> scores;
  for (std::size_t r = 0; r < o.repeats; ++r) {
    const BaselineResult b = raw_spectral_baseline(dataset, o.kernel_gamma, o.seed + r);
    runs.push_back({{"seed", o.seed + r},
                    {"rand_index", b.rand_index},
                    {"assignment", b.assignment.cluster_of}});
    scores.push_back(b.rand_index);
  }
  const Quartiles q = quartiles(scores);
  ordered_json doc{{"dataset", {{"n", dataset.size()},
                                {"c", dataset.num_classes()},
                                {"l", dataset.series_length()}}},
                   {"kernel_gamma", o.kernel_gamma},
                   {"runs", std::move(runs)},
                   {"rand_index_summary", {{"median", q.median}, {"q1", q.q1}, {"q3", q.q3}}}};
  write_output(o.out, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-supervised time-series clustering with salient shapelets"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "cluster a dataset");
  add_data_options(run_cmd, run.data);
  run_cmd->add_option("--supervision", run.supervision, "fraction of labeled series");
  run_cmd->add_option("--seed", run.seed, "master seed");
  run_cmd->add_option("--k", run.k, "shapelet count");
  run_cmd->add_option("--length-frac", run.length_frac, "shapelet length as a fraction of l");
  run_cmd->add_option("--lambda", run.lambda, "within-class scatter weight");
  run_cmd->add_option("--beta", run.beta, "candidates per shapelet");
  run_cmd->add_option("--kernel-gamma", run.kernel_gamma, "rbf kernel gamma");
  run_cmd->add_flag("--grid-search", run.grid, "search k, length and lambda");
  run_cmd->add_option("--repeats", run.repeats, "runs with seeds seed..seed+S-1");
  run_cmd->add_option("--out", run.out, "JSON output path ('-' for stdout)");
  run_cmd->add_option("--emit-csv", run.emit_csv, "write the final representation matrix");
  run_cmd->add_flag("--timings", run.timings, "include per-stage wall times");

  ChainOptions chain;
  auto* chain_cmd = app.add_subcommand("chain", "salient subsequence chain of one series");
  add_data_options(chain_cmd, chain.data);
  chain_cmd->add_option("--index", chain.index, "row of the series in the file");
  chain_cmd->add_option("--length", chain.length, "window length in samples");
  chain_cmd->add_option("--length-frac", chain.length_frac, "window length as a fraction of l");
  chain_cmd->add_option("--k", chain.k, "chain size");
  chain_cmd->add_flag("--brute-force", chain.brute_force, "exhaustive search instead of DP");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench-chain", "time find_chain against brute force (CSV)");
  bench_cmd->add_option("--data", bench.files, "UCR file (default: synthetic random walk)");
  bench_cmd->add_option("--delimiter", bench.delimiter);
  bench_cmd->add_option("--index", bench.index);
  bench_cmd->add_option("--series-length", bench.series_length, "synthetic series length");
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--fracs", bench.fracs, "window fractions")->delimiter(',');
  bench_cmd->add_option("--ks", bench.ks, "chain sizes")->delimiter(',');
  bench_cmd->add_option("--brute-force-limit", bench.brute_force_limit,
                        "skip brute force above this many start tuples");
  bench_cmd->add_option("--out", bench.out);

  BaselineOptions baseline;
  auto* base_cmd = app.add_subcommand("baseline", "spectral clustering on raw series");
  add_data_options(base_cmd, baseline.data);
  base_cmd->add_option("--seed", baseline.seed);
  base_cmd->add_option("--kernel-gamma", baseline.kernel_gamma);
  base_cmd->add_option("--repeats", baseline.repeats);
  base_cmd->add_option("--out", baseline.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*run_cmd) return run_command(run);
    if (*chain_cmd) return chain_command(chain);
    if (*bench_cmd) return bench_command(bench);
    if (*base_cmd) return baseline_command(baseline);
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::kInfeasible) return kExitInfeasible;
    if (e.kind() == ErrorKind::kInput) return kExitInput;
    return 1;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
