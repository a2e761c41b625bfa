#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace dircoal {

// Counter-based stream (Philox4x32-10). A stream is fully determined by
// (master_seed, tag, replicate), so replicates running on different workers
// draw from disjoint, reproducible streams with no shared state.
class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t master_seed, std::string_view tag, std::uint64_t replicate = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  double uniform01();    // [0, 1)
  double uniform_pos();  // (0, 1)
  double exponential(double rate);
  double normal();
  double gamma(double shape);  // unit scale
  std::int64_t poisson(double mean);
  std::uint64_t uniform_below(std::uint64_t n);  // unbiased on {0, ..., n-1}

 private:
  std::array<std::uint32_t, 4> counter_{};
  std::array<std::uint32_t, 2> key_{};
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;

  void refill();
};

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t mix64(std::uint64_t x);  // splitmix64 finalizer

}  // namespace dircoal
