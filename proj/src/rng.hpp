#pragma once

#include <cstdint>

namespace friendjam {

// Deterministic splittable PRNG: xoshiro256++ seeded via splitmix64 from a
// (seed, stream) pair. Identical (seed, stream) gives an identical draw
// sequence on every platform; distinct streams are statistically independent,
// so Monte Carlo trials can run in any order or in parallel with reproducible
// aggregate counts.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform on the open interval (0, 1); safe to pass to log().
  double uniform_open();

  // Unit-mean exponential draw, strictly positive.
  double exponential();

  bool bernoulli(double p) { return uniform() < p; }

  // Poisson draw by chunked Knuth multiplication (exact for any finite mean).
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t s_[4];
};

}  // namespace friendjam
