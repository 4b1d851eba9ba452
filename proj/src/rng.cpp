#include "rng.hpp"

#include <cmath>

namespace friendjam {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed;
  std::uint64_t a = splitmix64(x);
  // fold the stream index in, then mix again so neighboring streams decorrelate
  x ^= a ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
  bool all_zero = true;
  for (auto& si : s_) {
    si = splitmix64(x);
    if (si != 0) all_zero = false;
  }
  if (all_zero) s_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
  std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential() { return -std::log(uniform_open()); }

std::uint64_t RngStream::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  std::uint64_t total = 0;
  // Split large means so exp(-chunk) stays well inside normal double range.
  while (mean > 0.0) {
    double chunk = mean > 500.0 ? 500.0 : mean;
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double prod = 1.0;
    std::uint64_t k = 0;
    do {
      prod *= uniform_open();
      ++k;
    } while (prod > limit);
    total += k - 1;
  }
  return total;
}

}  // namespace friendjam
