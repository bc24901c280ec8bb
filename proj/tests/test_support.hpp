#pragma once

#include <string>
#include <vector>

#include "mae/jet.hpp"
#include "mae/parser.hpp"
#include "mae/sampling.hpp"

namespace mae::test {

inline VectorField field(const std::string& h1, const std::string& h2, const std::string& v11,
                         const std::string& v12, const std::string& v22) {
  return VectorField::frame(parse_expr(h1), parse_expr(h2), parse_expr(v11), parse_expr(v12),
                            parse_expr(v22));
}

inline Distribution frame_distribution(const std::vector<RationalVector>& rows) {
  return Distribution::from_frame_rows(rows);
}

// Reduced row echelon form of a constant-coefficient distribution's frame matrix.
inline RationalMatrix frame_rref(const Distribution& d) {
  return rref(d.frame_matrix_at(Point{}));
}

inline MultiPoly random_level1_poly(Sampler& s, int terms, int max_deg) {
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int deg = static_cast<int>(s.integer(0, max_deg));
    for (int k = 0; k < deg; ++k) m.exps[static_cast<std::size_t>(s.integer(0, 7))] += 1;
    p += MultiPoly::term(m, s.rational(4, 2));
  }
  return p;
}

inline VectorField random_full_field(Sampler& s) {
  FullComponents c;
  for (auto& x : c) x = random_level1_poly(s, 3, 2);
  return VectorField::full(c);
}

inline VectorField random_frame_field(Sampler& s, int terms = 2, int deg = 1) {
  FrameComponents c;
  for (auto& x : c) x = random_level1_poly(s, terms, deg);
  return VectorField::frame(c);
}

// The three constant distributions of the split quasi-linear example p111 - p112 - 2 p122.
inline const Distribution& piano(int i) {
  static const Distribution d1 = frame_distribution({{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 2, 0, 1}});
  static const Distribution d2 = frame_distribution({{1, 1, 0, 0, 0}, {0, 0, 2, 1, 0}, {0, 0, 0, 0, 1}});
  static const Distribution d3 = frame_distribution({{1, -2, 0, 0, 0}, {0, 0, 1, -1, 0}, {0, 0, 0, 0, 1}});
  return i == 1 ? d1 : i == 2 ? d2 : d3;
}

// R M3 - S M2 + T M1 + B . (p111, p112, p122, p222) + C with random level-1 coefficients.
inline MultiPoly random_boillat(Sampler& s, int terms = 2, int deg = 1) {
  auto v = [](const char* n) { return parse_expr(n); };
  const MultiPoly m1 = v("p111*p122 - p112^2");
  const MultiPoly m2 = v("p111*p222 - p112*p122");
  const MultiPoly m3 = v("p112*p222 - p122^2");
  MultiPoly f = random_level1_poly(s, terms, deg) * m3 - random_level1_poly(s, terms, deg) * m2 +
                random_level1_poly(s, terms, deg) * m1;
  for (const char* c : {"p111", "p112", "p122", "p222"}) f += random_level1_poly(s, terms, deg) * v(c);
  return f + random_level1_poly(s, terms, deg);
}

}  // namespace mae::test
