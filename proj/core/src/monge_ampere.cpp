#include "mae/monge_ampere.hpp"

#include <algorithm>

#include "mae/errors.hpp"
#include "mae/linalg.hpp"
#include "mae/metasymplectic.hpp"

namespace mae {

namespace {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

MultiPoly det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MultiPoly out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][j] * det(minor);
    if (j % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

std::vector<MultiPoly> as_row(const FrameComponents& c) { return {c.begin(), c.end()}; }

MultiPoly var(Coordinate c) { return MultiPoly::var(c); }

std::vector<Coordinate> third_order_vars() { return {kThirdOrder.begin(), kThirdOrder.end()}; }

Monomial mono(std::initializer_list<Coordinate> cs) {
  Monomial m;
  for (Coordinate c : cs) m.exps[index(c)] += 1;
  return m;
}

std::string monomial_name(const Monomial& m) { return MultiPoly::term(m, 1).to_string(); }

std::vector<FrameComponents> basis_frames(const Distribution& d) {
  const Distribution b = d.basis();
  std::vector<FrameComponents> out;
  for (const auto& g : b.generators()) out.push_back(g.frame());
  return out;
}

MultiPoly divide_or_throw(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_constant()) return num * (Rational(1) / den.constant_value());
  auto q = num.divide_exact(den);
  if (!q) throw Error(ErrorCode::NormalFormError, "normal form needs a rational function");
  return *q;
}

std::optional<MultiPoly> try_divide(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (den.is_constant()) return num * (Rational(1) / den.constant_value());
  return num.divide_exact(den);
}

}  // namespace

MultiPoly OneForm::apply(const VectorField& x) const {
  MultiPoly out;
  for (std::size_t i = 0; i < kNumLevel1; ++i) out += c[i] * x.full()[i];
  return out;
}

OneForm frame_covector(const FrameComponents& c) {
  OneForm f;
  f.c[0] = c[0];
  f.c[1] = c[1];
  f.c[5] = c[2];
  f.c[6] = c[3];
  f.c[7] = c[4];
  return f;
}

void TwoForm::set(std::size_t i, std::size_t j, const MultiPoly& v) {
  if (i == j) {
    if (!v.is_zero()) throw Error(ErrorCode::InvalidArgument, "diagonal of a 2-form must vanish");
    return;
  }
  w_[i][j] = v;
  w_[j][i] = -v;
}

TwoForm TwoForm::operator+(const TwoForm& o) const {
  TwoForm r;
  for (std::size_t i = 0; i < kNumLevel1; ++i) {
    for (std::size_t j = 0; j < kNumLevel1; ++j) r.w_[i][j] = w_[i][j] + o.w_[i][j];
  }
  return r;
}

bool TwoForm::is_antisymmetric() const {
  for (std::size_t i = 0; i < kNumLevel1; ++i) {
    for (std::size_t j = 0; j < kNumLevel1; ++j) {
      if (!(w_[i][j] + w_[j][i]).is_zero()) return false;
    }
  }
  return true;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  TwoForm w;
  for (std::size_t i = 0; i < kNumLevel1; ++i) {
    for (std::size_t j = i + 1; j < kNumLevel1; ++j) w.set(i, j, a.c[i] * b.c[j] - a.c[j] * b.c[i]);
  }
  return w;
}

MultiPoly BoillatForm::reconstruct() const {
  const MultiPoly m1 = var(Coordinate::p111) * var(Coordinate::p122) - var(Coordinate::p112).pow(2);
  const MultiPoly m2 = var(Coordinate::p111) * var(Coordinate::p222) -
                       var(Coordinate::p112) * var(Coordinate::p122);
  const MultiPoly m3 = var(Coordinate::p112) * var(Coordinate::p222) - var(Coordinate::p122).pow(2);
  MultiPoly f = A[0] * m3 - A[1] * m2 + A[2] * m1 + C;
  for (std::size_t k = 0; k < 4; ++k) f += B[k] * var(kThirdOrder[k]);
  return f;
}

MultiPoly GoursatForm::determinant() const {
  const PolyMatrix m = {
      {var(Coordinate::p111) - f[0], var(Coordinate::p112) - f[1], var(Coordinate::p122) - f[2]},
      {var(Coordinate::p112) - f[3], var(Coordinate::p122) - f[4], var(Coordinate::p222) - f[5]},
      {A[0], A[1], A[2]}};
  return det(m);
}

MultiPoly ed_determinant(const FrameComponents& g1, const FrameComponents& g2, const FrameComponents& g3) {
  return det({as_row(g1), as_row(g2), as_row(g3), as_row(symbolic_xi(1)), as_row(symbolic_xi(2))});
}

MultiPoly build_ED_raw(const Distribution& d) {
  if (d.generic_rank() != 3) {
    throw Error(ErrorCode::RankError, "expected rank 3, got " + std::to_string(d.generic_rank()));
  }
  const auto g = basis_frames(d);
  const MultiPoly f = ed_determinant(g[0], g[1], g[2]);
  if (f.max_level() < 2) {
    throw Error(ErrorCode::TrivialEquation, "the determinant does not involve third derivatives");
  }
  return f;
}

MultiPoly normalize_equation(const MultiPoly& f) {
  if (f.is_zero()) return f;
  MultiPoly g = f;
  // Common monomial factor in the level-1 coordinates.
  Monomial common;
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    for (std::size_t i = 0; i < kNumLevel1; ++i) {
      common.exps[i] = first ? m.exps[i] : std::min(common.exps[i], m.exps[i]);
    }
    first = false;
  }
  if (!common.is_one()) g = *g.divide_exact(MultiPoly::term(common, 1));
  // Trial division by coefficient polynomials.
  bool changed = true;
  while (changed) {
    changed = false;
    const auto coeffs = g.coefficients_in(third_order_vars());
    std::vector<MultiPoly> cands;
    for (const auto& [m, c] : coeffs) {
      if (!c.is_constant()) cands.push_back(c.primitive());
    }
    std::sort(cands.begin(), cands.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return a.terms().size() < b.terms().size(); });
    for (const auto& c : cands) {
      bool divides = true;
      for (const auto& [m, k] : coeffs) {
        if (!k.divide_exact(c)) {
          divides = false;
          break;
        }
      }
      if (divides) {
        g = *g.divide_exact(c);
        changed = true;
        break;
      }
    }
  }
  return g.primitive();
}

MultiPoly build_ED(const Distribution& d) { return normalize_equation(build_ED_raw(d)); }

bool proportional(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  const auto cf = f.coefficients_in(third_order_vars());
  const auto cg = g.coefficients_in(third_order_vars());
  if (cf.size() != cg.size()) return false;
  for (const auto& [m, c] : cf) {
    if (!cg.contains(m)) return false;
  }
  const auto& [m0, f0] = *cf.begin();
  const MultiPoly& g0 = cg.at(m0);
  for (const auto& [m, c] : cf) {
    if (!(c * g0 - cg.at(m) * f0).is_zero()) return false;
  }
  return true;
}

MultiPoly restrict_to_fiber(const MultiPoly& f, const JetPoint& m1) {
  std::array<bool, kNumCoordinates> mask{};
  for (std::size_t i = 0; i < kNumLevel1; ++i) mask[i] = true;
  return f.partial_eval(mask, m1.full());
}

bool proportional_on_fiber(const MultiPoly& f, const MultiPoly& g, const JetPoint& m1) {
  return proportional(restrict_to_fiber(f, m1), restrict_to_fiber(g, m1));
}

BoillatForm quasilinear_coefficients(const FrameComponents& h, const FrameComponents& x,
                                     const FrameComponents& y) {
  const MultiPoly& a = h[0];
  const MultiPoly& b = h[1];
  const MultiPoly m1 = x[3] * y[4] - x[4] * y[3];
  const MultiPoly m2 = x[2] * y[4] - x[4] * y[2];
  const MultiPoly m3 = x[2] * y[3] - x[3] * y[2];
  BoillatForm out;
  out.A = {0, 0, 0};
  out.B = {-(a * m1), a * m2 - b * m1, b * m2 - a * m3, -(b * m3)};
  out.C = h[2] * m1 - h[3] * m2 + h[4] * m3;
  return out;
}

BoillatForm quasilinear_coefficients(const Distribution& d) {
  const HorizontalSplit split = split_horizontal(d);
  if (split.vertical.size() != 2) throw Error(ErrorCode::NormalFormError, "expected two vertical generators");
  return quasilinear_coefficients(split.horizontal, split.vertical[0], split.vertical[1]);
}

MultiPoly build_E_omega(const TwoForm& w) {
  using C = Coordinate;
  const std::array<std::array<MultiPoly, 2>, kNumLevel1> sigma = {{
      {1, 0},
      {0, 1},
      {var(C::p1), var(C::p2)},
      {var(C::p11), var(C::p12)},
      {var(C::p12), var(C::p22)},
      {var(C::p111), var(C::p112)},
      {var(C::p112), var(C::p122)},
      {var(C::p122), var(C::p222)},
  }};
  MultiPoly f;
  for (std::size_t k = 0; k < kNumLevel1; ++k) {
    for (std::size_t l = k + 1; l < kNumLevel1; ++l) {
      if (w(k, l).is_zero()) continue;
      f += w(k, l) * (sigma[k][0] * sigma[l][1] - sigma[k][1] * sigma[l][0]);
    }
  }
  if (f.is_zero()) throw Error(ErrorCode::TrivialEquation, "the 2-form vanishes on every Lagrangian plane");
  return f;
}

std::array<OneForm, 2> annihilator(const Distribution& d) {
  if (d.generic_rank() != 3) throw Error(ErrorCode::RankError, "annihilator needs a rank-3 distribution");
  const auto g = basis_frames(d);
  std::vector<FrameComponents> cands;
  for (std::size_t i = 0; i < 5; ++i) {
    FrameComponents rho;
    FrameComponents ei{0, 0, 0, 0, 0};
    ei[i] = 1;
    for (std::size_t j = 0; j < 5; ++j) {
      FrameComponents ej{0, 0, 0, 0, 0};
      ej[j] = 1;
      rho[j] = det({as_row(g[0]), as_row(g[1]), as_row(g[2]), as_row(ei), as_row(ej)});
    }
    cands.push_back(rho);
  }
  const auto& samples = generic_sample_points();
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      for (const auto& p : samples) {
        RationalVector a, b;
        for (std::size_t k = 0; k < 5; ++k) {
          a.push_back(cands[i][k].eval(p));
          b.push_back(cands[j][k].eval(p));
        }
        if (rank(RationalMatrix::from_rows({a, b}, 5)) == 2) {
          return {frame_covector(cands[i]), frame_covector(cands[j])};
        }
      }
    }
  }
  throw Error(ErrorCode::RankError, "distribution is not inside C^1 with rank 3");
}

BoillatForm boillat_decompose(const MultiPoly& f) {
  using C = Coordinate;
  const auto coeffs = f.coefficients_in(third_order_vars());
  auto get = [&](const Monomial& m) {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? MultiPoly() : it->second;
  };
  const std::array<Monomial, 6> allowed = {
      mono({C::p111, C::p122}), mono({C::p112, C::p112}), mono({C::p111, C::p222}),
      mono({C::p112, C::p122}), mono({C::p112, C::p222}), mono({C::p122, C::p122})};
  for (const auto& [m, c] : coeffs) {
    const int d = m.degree();
    if (d <= 1) continue;
    if (d > 2 || std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
      throw Error(ErrorCode::NotMAE, monomial_name(m));
    }
  }
  // Each minor pairs two monomials with opposite coefficients.
  for (std::size_t k = 0; k < 6; k += 2) {
    if (!(get(allowed[k]) + get(allowed[k + 1])).is_zero()) {
      const Monomial& bad = get(allowed[k + 1]).is_zero() ? allowed[k] : allowed[k + 1];
      throw Error(ErrorCode::NotMAE, monomial_name(bad));
    }
  }
  BoillatForm out;
  out.A = {get(allowed[4]), get(allowed[3]), get(allowed[0])};
  for (std::size_t k = 0; k < 4; ++k) out.B[k] = get(Monomial::of(kThirdOrder[k]));
  out.C = get(Monomial{});
  return out;
}

GoursatForm goursat_form(const Distribution& d) {
  if (d.generic_rank() != 3) throw Error(ErrorCode::RankError, "expected a rank-3 distribution");
  if (vertical_part(d).generic_rank() != 1) {
    throw Error(ErrorCode::NormalFormError, "Goursat form needs a one-dimensional vertical part");
  }
  const auto g = basis_frames(d);
  auto hdet = [&](std::size_t i, std::size_t j) { return g[i][0] * g[j][1] - g[i][1] * g[j][0]; };
  std::size_t i = 0, j = 1, k = 2;
  for (const auto& [a, b, c] : std::array<std::array<std::size_t, 3>, 3>{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}}) {
    if (!hdet(a, b).is_zero()) {
      i = a;
      j = b;
      k = c;
      break;
    }
  }
  const MultiPoly dij = hdet(i, j);
  if (dij.is_zero()) throw Error(ErrorCode::DegenerateHorizontal, "horizontal projection has rank < 2");
  auto combo = [&](const MultiPoly& ci, std::size_t a, const MultiPoly& cj, std::size_t b) {
    FrameComponents r;
    for (std::size_t t = 0; t < 5; ++t) r[t] = ci * g[a][t] + cj * g[b][t];
    return r;
  };
  FrameComponents v;
  for (std::size_t t = 0; t < 5; ++t) v[t] = hdet(j, k) * g[i][t] - hdet(i, k) * g[j][t] + dij * g[k][t];
  const FrameComponents e1 = combo(g[j][1], i, -g[i][1], j);
  const FrameComponents e2 = combo(-g[j][0], i, g[i][0], j);
  GoursatForm out;
  for (std::size_t t = 0; t < 3; ++t) {
    out.f[t] = divide_or_throw(e1[t + 2], dij);
    out.f[t + 3] = divide_or_throw(e2[t + 2], dij);
  }
  out.A = {v[2], v[3], v[4]};
  if (out.A[0].is_constant() && out.A[1].is_constant() && out.A[2].is_constant()) {
    for (const auto& a : out.A) {
      if (!a.is_zero()) {
        const Rational s = Rational(1) / a.constant_value();
        for (auto& x : out.A) x = x * s;
        break;
      }
    }
  }
  const auto& [R, S, T] = out.A;
  const MultiPoly disc = R * T - S * S;
  if (!disc.is_zero()) {
    const MultiPoly r1 = out.f[3] - out.f[1];
    const MultiPoly r2 = out.f[4] - out.f[2];
    auto lambda = try_divide(R * r2 - S * r1, disc);
    auto mu = try_divide(S * r2 - T * r1, disc);
    if (lambda && mu) {
      for (std::size_t t = 0; t < 3; ++t) {
        out.f[t] += *lambda * out.A[t];
        out.f[t + 3] += *mu * out.A[t];
      }
      out.reduced = true;
    }
  }
  return out;
}

Distribution quasilinear_distribution(const MultiPoly& fiber_equation, const Direction& dir) {
  const BoillatForm bf = boillat_decompose(fiber_equation);
  if (!bf.quasi_linear()) throw Error(ErrorCode::NormalFormError, "equation is not quasi-linear");
  std::array<Rational, 4> s;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!bf.B[k].is_constant()) throw Error(ErrorCode::InvalidArgument, "expected a fibre equation");
    s[k] = bf.B[k].constant_value();
  }
  if (!bf.C.is_constant()) throw Error(ErrorCode::InvalidArgument, "expected a fibre equation");
  const Rational e = bf.C.constant_value();
  const auto [l, m] = dir.nu();
  std::array<Rational, 3> q;
  if (l != 0) {
    q[0] = s[0] / l;
    q[1] = (s[1] - m * q[0]) / l;
    q[2] = (s[2] - m * q[1]) / l;
  } else {
    q = {s[1] / m, s[2] / m, s[3] / m};
  }
  RationalVector h{l, m, 0, 0, 0};
  for (std::size_t k = 0; k < 3; ++k) {
    if (q[k] != 0) {
      h[2 + k] = -e / q[k];
      break;
    }
  }
  const RankKernel kern = rank_kernel(RationalMatrix::from_rows({{-q[0], -q[1], -q[2]}}, 3));
  std::vector<RationalVector> rows{h};
  for (const auto& v : kern.kernel_basis) rows.push_back({0, 0, v[0], v[1], v[2]});
  return Distribution::from_frame_rows(rows);
}

std::array<Distribution, 3> decompose_orthogonal_triple(const MultiPoly& f, const JetPoint& m1) {
  const MultiPoly g = restrict_to_fiber(f, m1.project(1));
  const BoillatForm bf = boillat_decompose(g);
  if (!bf.quasi_linear()) throw Error(ErrorCode::NormalFormError, "equation is not quasi-linear");
  BinaryCubic c;
  c.a = bf.B[0].constant_value();
  c.b = bf.B[1].constant_value();
  c.c = bf.B[2].constant_value();
  c.d = bf.B[3].constant_value();
  if (c.is_zero()) throw Error(ErrorCode::ZeroSymbol, "symbol vanishes over this point");
  if (discriminant_classify(c) == CubicType::OneRealIrreducibleQuadratic) {
    throw Error(ErrorCode::NotFullyDecomposable, "symbol has an irreducible quadratic factor");
  }
  std::vector<Direction> dirs;
  for (const auto& d : characteristic_directions(c)) {
    if (!d.exact()) throw Error(ErrorCode::InexactRoots, "symbol roots are irrational");
    for (int k = 0; k < d.multiplicity; ++k) dirs.push_back(d);
  }
  return {quasilinear_distribution(g, dirs[0]), quasilinear_distribution(g, dirs[1]),
          quasilinear_distribution(g, dirs[2])};
}

std::vector<JetPoint> probe_bases(const std::optional<JetPoint>& first) {
  std::vector<JetPoint> out;
  out.push_back(first ? first->project(1) : JetPoint::zero(1));
  const std::array<Rational, 8> schedule = {Rational(1),    Rational(-1), Rational(2),  Rational(1, 2),
                                            Rational(-2),   Rational(-1, 2), Rational(3), Rational(1, 3)};
  for (const auto& v : schedule) {
    Point p{};
    for (std::size_t i = 0; i < kNumLevel1; ++i) p[i] = v;
    out.push_back(JetPoint::from_point(1, p));
  }
  return out;
}

const char* class_name(EquationClass c) {
  switch (c) {
    case EquationClass::QuasiLinear: return "quasi-linear";
    case EquationClass::FullyNonlinearGoursat: return "fully-nonlinear-goursat";
    case EquationClass::MAEnotGoursat: return "mae-not-goursat";
    case EquationClass::NotMAE: return "not-mae";
  }
  return "?";
}

namespace {

struct ProbedCone {
  JetPoint base = JetPoint::zero(1);
  ConeSample cone;
  std::vector<Distribution> validated;
  std::vector<std::string> notes;
};

ProbedCone probe_cone(const MultiPoly& f, const ProbeOptions& opts) {
  ProbedCone out;
  for (const auto& base : probe_bases(opts.base)) {
    if (restrict_to_fiber(f, base).max_level() < 2) {
      out.notes.push_back("symbol vanishes over a probe base; moved on");
      continue;
    }
    try {
      out.cone = cone_sample(f, base, opts.seed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientSamples && e.code() != ErrorCode::ZeroSymbol) throw;
      out.notes.push_back("too few usable fibre points over a probe base; moved on");
      continue;
    }
    out.base = base;
    for (const auto& d : out.cone.linear_components) {
      try {
        if (proportional_on_fiber(f, build_ED(d), base)) out.validated.push_back(d);
      } catch (const Error&) {
        out.notes.push_back("a candidate linear component gave a degenerate equation");
      }
    }
    for (const auto& n : out.cone.notes) out.notes.push_back(n);
    return out;
  }
  throw Error(ErrorCode::ZeroSymbol, "no probe base with a nondegenerate fibre");
}

}  // namespace

GoursatDetection detect_goursat(const MultiPoly& f, const ProbeOptions& opts) {
  GoursatDetection out;
  try {
    out.boillat = boillat_decompose(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotMAE) throw;
    out.kind = EquationClass::NotMAE;
    out.offending_monomial = std::string(e.what()).substr(std::string("NotMAE: ").size());
    return out;
  }
  const ProbedCone probe = probe_cone(f, opts);
  out.base = probe.base;
  out.notes = probe.notes;
  if (out.boillat->quasi_linear()) {
    out.kind = EquationClass::QuasiLinear;
    try {
      const auto triple = decompose_orthogonal_triple(f, probe.base);
      out.distributions.assign(triple.begin(), triple.end());
      out.orthogonal = is_threefold_orthogonal(triple[0], triple[1], triple[2]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFullyDecomposable && e.code() != ErrorCode::InexactRoots) throw;
      out.notes.push_back(e.what());
      out.distributions = probe.validated;
    }
    return out;
  }
  for (const auto& d : probe.validated) {
    if (vertical_part(d).generic_rank() == 1) {
      out.kind = EquationClass::FullyNonlinearGoursat;
      out.distributions.push_back(d);
      out.goursat = goursat_form(d);
      return out;
    }
  }
  out.kind = EquationClass::MAEnotGoursat;
  return out;
}

namespace {

// The p111 case; the p222 case is the mirror image under 1 <-> 2.
std::pair<MultiPoly, MultiPoly> delta_certificate(const RationalVector& k, const RationalVector& h,
                                                  const std::array<MultiPoly, 4>& P) {
  const Rational &k1 = k[0], &k2 = k[1], &k11 = k[2], &k12 = k[3], &k22 = k[4];
  const Rational &h1 = h[0], &h2 = h[1], &h11 = h[2], &h12 = h[3], &h22 = h[4];
  const MultiPoly &P111 = P[0], &P112 = P[1], &P122 = P[2], &P222 = P[3];
  const MultiPoly delta = Rational(h11 * k22 - k11 * h22) * P222 + Rational(h11 * k12 - k11 * h12) * P122 +
                          MultiPoly(Rational(h11 * k2 - k11 * h2));
  MultiPoly rhs = MultiPoly(Rational(-h1 * k2 + k1 * h2));
  rhs -= Rational(h11 * k2 - k11 * h2) * P111;
  rhs -= Rational(k11 * h1 - h11 * k1 + k2 * h12 - k12 * h2) * P112;
  rhs -= Rational(k2 * h22 + k12 * h1 - k22 * h2 - k1 * h12) * P122;
  rhs -= Rational(k22 * h1 - k1 * h22) * P222;
  rhs += Rational(k12 * h22 - h12 * k22) * (P112 * P222 - P122 * P122);
  rhs += Rational(k22 * h11 - k11 * h22) * (P112 * P122 - P111 * P222);
  rhs += Rational(k11 * h12 - h11 * k12) * (P111 * P122 - P112 * P112);
  return {delta, rhs};
}

}  // namespace

Recovery recover_distribution(const MultiPoly& f, const ProbeOptions& opts) {
  const ProbedCone probe = probe_cone(f, opts);
  if (probe.validated.empty()) {
    throw Error(ErrorCode::NotGoursat, "characteristic lines of the linear factor do not span a 3D space");
  }
  Recovery out;
  out.base = probe.base;
  out.notes = probe.notes;
  out.distribution = probe.validated.front();
  out.alternatives.assign(probe.validated.begin() + 1, probe.validated.end());
  if (!out.alternatives.empty()) {
    out.notes.push_back(std::to_string(probe.validated.size()) + " distributions share this equation");
  }
  out.rho = annihilator(out.distribution);
  const auto dist = probe.cone.distinguished;
  if (dist == Coordinate::p111 || dist == Coordinate::p222) {
    const RankKernel kern = rank_kernel(out.distribution.frame_matrix_at(Point{}));
    RationalVector k = kern.kernel_basis.at(0);
    RationalVector h = kern.kernel_basis.at(1);
    RecoveryCertificate cert;
    cert.distinguished = *dist;
    cert.annihilator = RationalMatrix::from_rows({k, h}, 5);
    cert.rank = rank(cert.annihilator);
    std::array<MultiPoly, 4> P{var(Coordinate::p111), var(Coordinate::p112), var(Coordinate::p122),
                               var(Coordinate::p222)};
    if (dist == Coordinate::p222) {
      auto mirror = [](const RationalVector& r) { return RationalVector{r[1], r[0], r[4], r[3], r[2]}; };
      k = mirror(k);
      h = mirror(h);
      std::reverse(P.begin(), P.end());
    }
    auto [delta, rhs] = delta_certificate(k, h, P);
    if (delta.is_zero()) {
      throw Error(ErrorCode::DiscriminantVanishes, "the linear system for the solved form degenerates");
    }
    cert.delta = delta;
    cert.delta_solved = rhs;
    cert.proportional = proportional(rhs, restrict_to_fiber(f, probe.base));
    out.certificate = cert;
  } else {
    out.notes.push_back("no solved-form certificate for a mixed distinguished coordinate");
  }
  return out;
}

RecoverabilityReport check_recoverable(const MultiPoly& f, const ProbeOptions& opts, std::size_t bases) {
  boillat_decompose(f);
  RecoverabilityReport out;
  std::size_t used = 0;
  for (const auto& base : probe_bases(opts.base)) {
    if (used >= bases) break;
    if (restrict_to_fiber(f, base).max_level() < 2) continue;
    ConeSample cone;
    try {
      cone = cone_sample(f, base, opts.seed);
    } catch (const Error&) {
      continue;
    }
    ++used;
    for (std::size_t i = 0; i < cone.points.size(); ++i) {
      ++out.points_checked;
      const JetPoint& m2 = cone.points[i];
      for (const auto& line : cone.lines[i]) {
        ++out.lines_checked;
        if (!is_strong_characteristic(f, line, m2)) {
          out.recoverable = false;
          out.witness = "line through " + std::to_string(i) + "-th fibre point leaves the equation";
          if (line.exact()) {
            // A concrete plane containing the line but not on E.
            const auto nu = line.direction.nu();
            const Rational a1 = -nu[1], a2 = nu[0];
            const std::array<Rational, 4> cube{a1 * a1 * a1, a1 * a1 * a2, a1 * a2 * a2, a2 * a2 * a2};
            for (int t = 1; t <= f.degree() + 1; ++t) {
              Point p = m2.full();
              for (std::size_t k = 0; k < 4; ++k) p[index(kThirdOrder[k])] += Rational(t) * cube[k];
              if (f.eval(p) != 0) {
                std::string w = "F != 0 at p111..p222 = (";
                for (std::size_t k = 0; k < 4; ++k) {
                  w += to_string(p[index(kThirdOrder[k])]) + (k < 3 ? ", " : ")");
                }
                out.witness = w;
                break;
              }
            }
          }
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace mae
