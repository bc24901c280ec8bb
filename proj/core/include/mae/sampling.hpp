#pragma once

#include <cstdint>
#include <random>

#include "mae/multipoly.hpp"

namespace mae {

inline constexpr std::uint64_t kDefaultSeed = 20240517ULL;

// Deterministic across platforms: only raw mt19937_64 output is consumed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  // Numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational rational(int max_num = 7, int max_den = 3);
  Rational nonzero_rational(int max_num = 7, int max_den = 3);
  Point point(int max_num = 7, int max_den = 3);

 private:
  std::mt19937_64 rng_;
};

// Sample points used for generic-rank decisions; always the same for a given seed.
const std::vector<Point>& generic_sample_points();
inline constexpr std::size_t kGenericSamples = 5;

}  // namespace mae
