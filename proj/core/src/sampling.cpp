#include "mae/sampling.hpp"

namespace mae {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::rational(int max_num, int max_den) {
  const auto num = integer(-max_num, max_num);
  const auto den = integer(1, max_den);
  return make_rational(num, den);
}

Rational Sampler::nonzero_rational(int max_num, int max_den) {
  Rational q = 0;
  while (q == 0) q = rational(max_num, max_den);
  return q;
}

Point Sampler::point(int max_num, int max_den) {
  Point p;
  for (auto& v : p) v = rational(max_num, max_den);
  return p;
}

const std::vector<Point>& generic_sample_points() {
  static const std::vector<Point> points = [] {
    Sampler s(kDefaultSeed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < kGenericSamples; ++i) {
      Point p;
      for (auto& v : p) v = s.nonzero_rational(97, 13);
      pts.push_back(p);
    }
    return pts;
  }();
  return points;
}

}  // namespace mae
