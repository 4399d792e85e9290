#pragma once

#include <cstdint>
#include <random>

#include "tidanse/types.hpp"

namespace tidanse {

// splitmix64, used to derive well-separated seeds for per-purpose streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One logical random stream. Uniform drawing maps the raw 64-bit output to
// [0,1) directly so sequences depend only on mt19937_64, not on the standard
// library's distribution implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  Complex complex_uniform(double lo, double hi) {
    const double re = uniform(lo, hi);
    const double im = uniform(lo, hi);
    return {re, im};
  }
  bool bernoulli(double p) { return uniform01() < p; }

  CMat complex_uniform_matrix(Index rows, Index cols, double lo, double hi) {
    CMat m(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) = complex_uniform(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

// Streams are keyed by (seed, purpose, index) so that distinct logical uses
// never share a sequence and Monte-Carlo run j is independent of other runs.
inline RngStream make_stream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index = 0) {
  return RngStream(mix64(mix64(seed ^ mix64(purpose)) + index));
}

namespace stream_purpose {
constexpr std::uint64_t steering = 1;
constexpr std::uint64_t thermal_calibration = 2;
constexpr std::uint64_t signal = 3;
constexpr std::uint64_t perturbation = 4;
constexpr std::uint64_t scm_init = 5;
constexpr std::uint64_t tree_weights = 6;
constexpr std::uint64_t topology = 7;
}  // namespace stream_purpose

}  // namespace tidanse
