#pragma once

// Independent reference computations used only by tests. Each is written the
// slow, obvious way and shares no code with the library path it checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double population_std(const std::vector<double>& v) {
  const double mu = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return std::sqrt(s / static_cast<double>(v.size()));
}

inline double distance(const double* a, const double* b, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Minimum over every window of x.
inline double min_window_distance(const std::vector<double>& s,
                                  const std::vector<double>& x) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + s.size() <= x.size(); ++i) {
    best = std::min(best, distance(s.data(), x.data() + i, s.size()));
  }
  return best;
}

// Rand index by counting agreements over ordered pairs and halving.
inline double rand_index(const std::vector<int>& pred, const std::vector<int>& truth) {
  std::size_t agree = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < pred.size(); ++j) {
      if (i == j) continue;
      ++total;
      if ((pred[i] == pred[j]) == (truth[i] == truth[j])) ++agree;
    }
  }
  return static_cast<double>(agree / 2) / static_cast<double>(total / 2);
}

// Scatter matrices by explicit entry-wise sums.
struct Scatter {
  Eigen::MatrixXd between;
  Eigen::MatrixXd within;
  Eigen::MatrixXd total;
};

inline Scatter scatter(const Eigen::MatrixXd& h, const std::vector<int>& labels,
                       int classes) {
  const int rows = static_cast<int>(h.rows());
  const int cols = static_cast<int>(h.cols());
  std::vector<std::vector<double>> class_mean(classes, std::vector<double>(rows, 0.0));
  std::vector<int> count(classes, 0);
  std::vector<double> global(rows, 0.0);
  for (int j = 0; j < cols; ++j) {
    ++count[labels[j]];
    for (int r = 0; r < rows; ++r) {
      class_mean[labels[j]][r] += h(r, j);
      global[r] += h(r, j);
    }
  }
  for (int c = 0; c < classes; ++c)
    for (int r = 0; r < rows; ++r) class_mean[c][r] /= count[c];
  for (int r = 0; r < rows; ++r) global[r] /= cols;

  Scatter s{Eigen::MatrixXd::Zero(rows, rows), Eigen::MatrixXd::Zero(rows, rows),
            Eigen::MatrixXd::Zero(rows, rows)};
  for (int a = 0; a < rows; ++a) {
    for (int b = 0; b < rows; ++b) {
      for (int c = 0; c < classes; ++c) {
        s.between(a, b) += count[c] * (class_mean[c][a] - global[a]) *
                           (class_mean[c][b] - global[b]);
      }
      for (int j = 0; j < cols; ++j) {
        const auto& u = class_mean[labels[j]];
        s.within(a, b) += (h(a, j) - u[a]) * (h(b, j) - u[b]);
        s.total(a, b) += (h(a, j) - global[a]) * (h(b, j) - global[b]);
      }
    }
  }
  return s;
}

// Uniformly random valid chain: draws k starts among the "free" slots and
// spreads them out, which maps bijectively onto non-overlapping chains.
inline std::vector<std::size_t> random_chain(std::size_t series_length,
                                             std::size_t window, std::size_t k,
                                             std::mt19937_64& rng) {
  const std::size_t m = series_length - window + 1;
  const std::size_t slots = m - (k - 1) * (window - 1);
  std::vector<std::size_t> pool(slots);
  for (std::size_t i = 0; i < slots; ++i) pool[i] = i;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, slots - 1);
    std::swap(pool[i], pool[d(rng)]);
    picked.push_back(pool[i]);
  }
  std::sort(picked.begin(), picked.end());
  for (std::size_t i = 0; i < k; ++i) picked[i] += i * (window - 1);
  return picked;
}

inline double chain_sum(const std::vector<double>& x, std::size_t window,
                        const std::vector<std::size_t>& starts) {
  double s = 0.0;
  for (std::size_t j = 0; j + 1 < starts.size(); ++j) {
    s += distance(x.data() + starts[j], x.data() + starts[j + 1], window);
  }
  return s;
}

inline std::vector<double> random_series(std::size_t len, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(len);
  for (double& x : v) x = d(rng);
  return v;
}

}  // namespace oracle
