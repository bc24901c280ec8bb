#include "mae/random_models.hpp"

#include "mae/errors.hpp"
#include "mae/linalg.hpp"

namespace mae {

namespace {

RationalVector small_row(Sampler& s, bool horizontal) {
  RationalVector r(5);
  for (std::size_t i = 0; i < 5; ++i) r[i] = (i < 2 && !horizontal) ? 0 : s.integer(-2, 2);
  return r;
}

bool usable(const Distribution& d) {
  try {
    build_ED(d);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

MultiPoly random_level1_polynomial(Sampler& s, int terms, int max_deg, int max_num) {
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int deg = static_cast<int>(s.integer(0, max_deg));
    for (int k = 0; k < deg; ++k) m.exps[static_cast<std::size_t>(s.integer(0, kNumLevel1 - 1))] += 1;
    p += MultiPoly::term(m, s.rational(max_num, 2));
  }
  return p;
}

Distribution random_vertical_rank1(Sampler& s) {
  while (true) {
    const std::vector<RationalVector> rows{small_row(s, true), small_row(s, true), small_row(s, false)};
    const RationalMatrix m = RationalMatrix::from_rows(rows, 5);
    if (rank(m) != 3) continue;
    const RationalMatrix h = RationalMatrix::from_rows({{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}}, 2);
    if (rank(h) != 2) continue;
    const Distribution d = Distribution::from_frame_rows(rows);
    if (usable(d)) return d;
  }
}

Distribution random_vertical_rank2(Sampler& s) {
  while (true) {
    RationalVector h = small_row(s, true);
    if (h[0] == 0 && h[1] == 0) continue;
    const std::vector<RationalVector> rows{h, small_row(s, false), small_row(s, false)};
    if (rank(RationalMatrix::from_rows(rows, 5)) != 3) continue;
    const Distribution d = Distribution::from_frame_rows(rows);
    if (!usable(d)) continue;
    const BoillatForm bf = boillat_decompose(build_ED(d));
    const BinaryCubic c{bf.B[0].constant_value(), bf.B[1].constant_value(), bf.B[2].constant_value(),
                        bf.B[3].constant_value()};
    if (c.is_zero() || discriminant(c) < 0) continue;
    bool exact = true;
    for (const auto& dir : characteristic_directions(c)) exact = exact && dir.exact();
    if (exact) return d;
  }
}

Distribution QuasiLinearNormalForm::distribution() const {
  return Distribution({VectorField::frame(h), VectorField::frame(x), VectorField::frame(y)});
}

QuasiLinearNormalForm random_quasilinear_normal_form(Sampler& s) {
  QuasiLinearNormalForm out;
  while (true) {
    for (auto& e : out.h) e = random_level1_polynomial(s, 2, 1);
    out.x = {0, 0, random_level1_polynomial(s, 2, 1), random_level1_polynomial(s, 2, 1),
             random_level1_polynomial(s, 2, 1)};
    out.y = {0, 0, random_level1_polynomial(s, 2, 1), random_level1_polynomial(s, 2, 1),
             random_level1_polynomial(s, 2, 1)};
    if (out.h[0].is_zero() && out.h[1].is_zero()) continue;
    if (out.distribution().generic_rank() == 3) return out;
  }
}

BoillatForm random_boillat_form(Sampler& s, int terms, int max_deg) {
  BoillatForm f;
  for (auto& a : f.A) a = random_level1_polynomial(s, terms, max_deg);
  for (auto& b : f.B) b = random_level1_polynomial(s, terms, max_deg);
  f.C = random_level1_polynomial(s, terms, max_deg);
  return f;
}

std::array<FrameComponents, 2> random_covector_pair(Sampler& s) {
  while (true) {
    std::array<FrameComponents, 2> out;
    for (auto& rho : out) {
      for (auto& e : rho) e = s.integer(0, 2) == 0 ? random_level1_polynomial(s, 1, 1) : MultiPoly(s.integer(-2, 2));
    }
    try {
      if (common_kernel(out[0], out[1]).generic_rank() == 3) return out;
    } catch (const Error&) {
    }
  }
}

Distribution common_kernel(const FrameComponents& rho1, const FrameComponents& rho2) {
  // For each column triple, the 2x2 cofactors give a vector killed by both covectors.
  std::vector<VectorField> gens;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t k = j + 1; k < 5; ++k) {
        FrameComponents v{0, 0, 0, 0, 0};
        v[i] = rho1[j] * rho2[k] - rho1[k] * rho2[j];
        v[j] = rho1[k] * rho2[i] - rho1[i] * rho2[k];
        v[k] = rho1[i] * rho2[j] - rho1[j] * rho2[i];
        gens.push_back(VectorField::frame(v));
      }
    }
  }
  const Distribution all(std::move(gens));
  if (all.generic_rank() != 3) throw Error(ErrorCode::RankError, "covectors are dependent");
  return all.basis();
}

}  // namespace mae
