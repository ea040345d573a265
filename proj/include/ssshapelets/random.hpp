#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ssshapelets {

// Derives an independent seed for a named stage from the master seed, so that
// the amount of randomness one stage consumes never shifts another stage.
// Streams used by the pipeline: "label-sampling", "kmeans", "spectral-kmeans",
// "repeat".
std::uint64_t stream_seed(std::uint64_t master, std::string_view stream,
                          std::uint64_t index = 0);

// 64-bit Mersenne Twister with portable bounded draws; the standard
// distributions are implementation-defined, which would break byte-identical
// output across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform real in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ssshapelets
