#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>

namespace trigraph {

// xoshiro256** (Blackman/Vigna), seeded through SplitMix64. Chosen over
// std::mt19937_64 because the standard library distributions are not
// bit-stable across implementations; everything here is.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  // Independent stream derived from (seed, stream). Used wherever a run
  // fans out into parallel substreams.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed;
    std::uint64_t a = splitmix64(x);
    x = stream + 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(x);
    return Rng(a ^ (b * 0xff51afd7ed558ccdULL));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // [0,1) with 53 random bits.
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Inversion sampler; fine for the small lambdas used here.
  std::uint32_t poisson(double lambda) {
    if (lambda < 0) throw std::invalid_argument("Rng::poisson: lambda must be >= 0");
    if (lambda == 0) return 0;
    if (lambda > 500) throw std::invalid_argument("Rng::poisson: lambda too large for inversion");
    double u = uniform01();
    double p = std::exp(-lambda);
    double cdf = p;
    std::uint32_t k = 0;
    while (u >= cdf && k < 100000) {
      ++k;
      p *= lambda / k;
      cdf += p;
    }
    return k;
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace trigraph
