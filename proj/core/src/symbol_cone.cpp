#include "mae/symbol_cone.hpp"

#include <algorithm>
#include <cmath>

#include "mae/errors.hpp"
#include "mae/linalg.hpp"

namespace mae {

namespace {

constexpr std::array<Coordinate, 4> kDistinguishedOrder = {Coordinate::p111, Coordinate::p222,
                                                           Coordinate::p112, Coordinate::p122};

std::size_t third_slot(Coordinate c) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (kThirdOrder[i] == c) return i;
  }
  throw Error(ErrorCode::InvalidArgument, "not a third-order coordinate");
}

// F with every coordinate of level <= 1 fixed by m1.
MultiPoly fiber_restriction(const ThirdOrderPDE& f, const JetPoint& m1) {
  std::array<bool, kNumCoordinates> mask{};
  for (std::size_t i = 0; i < kNumLevel1; ++i) mask[i] = true;
  return f.partial_eval(mask, m1.full());
}

Rational height(const Rational& q) {
  Rational n = abs(q.get_num());
  Rational d = q.get_den();
  return n > d ? n : d;
}

std::array<UPoly, 4> cube_direction(const Direction& dir) {
  // alpha = (-nu2, nu1); components alpha1^3, alpha1^2 alpha2, alpha1 alpha2^2, alpha2^3.
  if (dir.at_infinity) {
    return {UPoly::constant(-1), UPoly(), UPoly(), UPoly()};
  }
  const UPoly s = UPoly::x();
  const UPoly one = UPoly::constant(1);
  return {Rational(-1) * (s * s * s), s * s, Rational(-1) * s, one};
}

using TPoly = std::vector<UPoly>;

TPoly tmul(const TPoly& a, const TPoly& b) {
  TPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RationalVector line_coords(const LagrangianPlane& plane, const std::array<Rational, 2>& nu) {
  RationalVector v(5);
  const auto x1 = plane.xi(1);
  const auto x2 = plane.xi(2);
  for (std::size_t i = 0; i < 5; ++i) v[i] = nu[0] * x1[i] + nu[1] * x2[i];
  for (const auto& e : v) {
    if (e != 0) {
      const Rational lead = e;
      for (auto& x : v) x /= lead;
      break;
    }
  }
  return v;
}

std::array<double, 5> line_approx(const LagrangianPlane& plane, const std::array<double, 2>& nu) {
  std::array<double, 5> v{};
  const auto x1 = plane.xi(1);
  const auto x2 = plane.xi(2);
  for (std::size_t i = 0; i < 5; ++i) v[i] = nu[0] * x1[i].get_d() + nu[1] * x2[i].get_d();
  for (double e : v) {
    if (std::abs(e) > 1e-300) {
      for (auto& x : v) x /= e;
      break;
    }
  }
  return v;
}

bool in_span(const std::vector<RationalVector>& rows, const RationalVector& v) {
  auto with = rows;
  with.push_back(v);
  return rank(RationalMatrix::from_rows(with, 5)) == rank(RationalMatrix::from_rows(rows, 5));
}

}  // namespace

SymbolicCubic symbol(const ThirdOrderPDE& f) {
  return {f.derivative(Coordinate::p111), f.derivative(Coordinate::p112),
          f.derivative(Coordinate::p122), f.derivative(Coordinate::p222)};
}

BinaryCubic symbol(const ThirdOrderPDE& f, const JetPoint& m2) {
  const BinaryCubic c = symbol(f).at(m2.full());
  if (c.is_zero()) throw Error(ErrorCode::ZeroSymbol, "symbol vanishes at this point");
  return c;
}

Rational HomogeneousCubic::eval(const Rational& nu1, const Rational& nu2) const {
  return c[0] * nu1 * nu1 * nu1 + c[1] * nu1 * nu1 * nu2 + c[2] * nu1 * nu2 * nu2 +
         c[3] * nu2 * nu2 * nu2;
}

HomogeneousCubic char_poly(const BinaryCubic& s) {
  // sum over l1 + l2 = 3 of (-1)^l1 dF/dp_{1^l1 2^l2} (nu2)^l1 (nu1)^l2
  return {{s.d, -s.c, s.b, -s.a}};
}

HomogeneousCubic char_poly(const ThirdOrderPDE& f, const JetPoint& m2) {
  return char_poly(symbol(f, m2));
}

Rational discriminant(const BinaryCubic& q) {
  const Rational &a = q.a, &b = q.b, &c = q.c, &d = q.d;
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

CubicType discriminant_classify(const BinaryCubic& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroSymbol, "zero cubic");
  const int sign = sgn(discriminant(c));
  if (sign > 0) return CubicType::ThreeDistinct;
  if (sign == 0) return CubicType::RepeatedLinear;
  return CubicType::OneRealIrreducibleQuadratic;
}

const char* cubic_type_name(CubicType t) {
  switch (t) {
    case CubicType::ThreeDistinct: return "ThreeDistinct";
    case CubicType::RepeatedLinear: return "RepeatedLinear";
    case CubicType::OneRealIrreducibleQuadratic: return "OneRealIrreducibleQuadratic";
  }
  return "?";
}

const char* factor_name(FactorKind k) { return k == FactorKind::Linear ? "linear" : "quadratic"; }

std::array<Rational, 2> Direction::nu() const {
  if (at_infinity) return {Rational(0), Rational(1)};
  if (minpoly.degree() != 1) throw Error(ErrorCode::InexactRoots, "irrational direction");
  const UPoly m = minpoly.monic();
  return {Rational(1), Rational(-m.coeff(0))};
}

std::array<double, 2> Direction::nu_approx() const {
  if (at_infinity) return {0.0, 1.0};
  return {1.0, approx};
}

std::vector<Direction> characteristic_directions(const BinaryCubic& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroSymbol, "zero cubic");
  // The symbol evaluated on the annihilator (-s, 1) of nu = (1, s).
  const UPoly g({c.d, -c.c, c.b, -c.a});
  std::vector<Direction> out;
  const RootDecomposition roots = decompose_roots(g);
  for (const auto& r : roots.rational) {
    Direction d;
    d.minpoly = UPoly({-r.value, Rational(1)});
    d.approx = r.value.get_d();
    d.multiplicity = r.multiplicity;
    out.push_back(d);
  }
  if (g.degree() < 3) {
    Direction d;
    d.at_infinity = true;
    d.minpoly = UPoly::constant(1);
    d.multiplicity = 3 - g.degree();
    out.push_back(d);
  }
  std::stable_sort(out.begin(), out.end(), [](const Direction& x, const Direction& y) {
    const Rational hx = x.at_infinity ? Rational(1) : height(x.nu()[1]);
    const Rational hy = y.at_infinity ? Rational(1) : height(y.nu()[1]);
    if (hx != hy) return hx < hy;
    if (x.at_infinity != y.at_infinity) return y.at_infinity;
    return !x.at_infinity && x.nu()[1] < y.nu()[1];
  });
  for (const auto& r : roots.irrational) {
    Direction d;
    d.minpoly = r.minpoly;
    d.approx = r.approx;
    out.push_back(d);
  }
  return out;
}

CubicFactorization factor_cubic(const BinaryCubic& c) {
  CubicFactorization out;
  out.roots = characteristic_directions(c);
  const Direction& lin = out.roots.front();
  if (lin.exact()) {
    const auto [l, m] = lin.nu();
    out.linear = {l, m};
    std::array<Rational, 3>& q = out.quadratic;
    if (l != 0) {
      q[0] = c.a / l;
      q[1] = (c.b - m * q[0]) / l;
      q[2] = (c.c - m * q[1]) / l;
    } else {
      q = {c.b / m, c.c / m, c.d / m};
    }
    for (std::size_t i = 0; i < 2; ++i) out.linear_approx[i] = out.linear[i].get_d();
    for (std::size_t i = 0; i < 3; ++i) out.quadratic_approx[i] = q[i].get_d();
    return out;
  }
  out.exact = false;
  // Newton polish on the dehomogenized cubic from the isolating-interval midpoint.
  const long double a = c.a.get_d(), b = c.b.get_d(), cc = c.c.get_d(), d = c.d.get_d();
  long double s = lin.approx;
  for (int it = 0; it < 8; ++it) {
    const long double g = ((-a * s + b) * s - cc) * s + d;
    const long double dg = (-3 * a * s + 2 * b) * s - cc;
    if (dg == 0 || std::abs(static_cast<double>(g)) < 1e-15) break;
    s -= g / dg;
  }
  out.linear_approx = {1.0, static_cast<double>(s)};
  const long double q0 = a;
  const long double q1 = b - s * q0;
  const long double q2 = cc - s * q1;
  out.quadratic_approx = {static_cast<double>(q0), static_cast<double>(q1), static_cast<double>(q2)};
  return out;
}

std::vector<CharLine> characteristic_lines(const ThirdOrderPDE& f, const JetPoint& m2) {
  if (m2.level() < 2) throw Error(ErrorCode::InvalidArgument, "characteristic lines need a level-2 point");
  if (f.eval(m2.full()) != 0) throw Error(ErrorCode::NotOnEquation, "F does not vanish at the point");
  const BinaryCubic c = symbol(f, m2);
  const LagrangianPlane plane(m2);
  std::vector<CharLine> out;
  const auto dirs = characteristic_directions(c);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    CharLine line;
    line.direction = dirs[i];
    line.factor = i == 0 ? FactorKind::Linear : FactorKind::Quadratic;
    if (dirs[i].exact()) {
      line.coords = line_coords(plane, dirs[i].nu());
      for (std::size_t k = 0; k < 5; ++k) line.approx[k] = line.coords[k].get_d();
    } else {
      line.approx = line_approx(plane, dirs[i].nu_approx());
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<UPoly> restriction_to_prolongation(const ThirdOrderPDE& f, const JetPoint& m2,
                                               const Direction& dir) {
  const MultiPoly g = fiber_restriction(f, m2);
  const auto alpha = cube_direction(dir);
  TPoly total{UPoly()};
  for (const auto& [mono, coeff] : g.terms()) {
    TPoly term{UPoly::constant(coeff)};
    for (std::size_t k = 0; k < 4; ++k) {
      const int e = mono.exponent(kThirdOrder[k]);
      const TPoly factor{UPoly::constant(m2[kThirdOrder[k]]), alpha[k]};
      for (int j = 0; j < e; ++j) term = tmul(term, factor);
    }
    if (term.size() > total.size()) total.resize(term.size());
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  }
  return total;
}

bool is_strong_characteristic(const ThirdOrderPDE& f, const CharLine& h, const JetPoint& m2) {
  if (f.eval(m2.full()) != 0) throw Error(ErrorCode::NotOnEquation, "F does not vanish at the point");
  const LagrangianPlane plane(m2);
  if (h.exact()) {
    if (!in_span({plane.xi(1), plane.xi(2)}, h.coords)) {
      throw Error(ErrorCode::LineNotInPlane, "line is not in the Lagrangian plane");
    }
  } else {
    const auto expect = line_approx(plane, h.direction.nu_approx());
    for (std::size_t i = 0; i < 5; ++i) {
      if (std::abs(expect[i] - h.approx[i]) > 1e-9 * (1 + std::abs(expect[i]))) {
        throw Error(ErrorCode::LineNotInPlane, "line is not in the Lagrangian plane");
      }
    }
  }
  for (const auto& coeff : restriction_to_prolongation(f, m2, h.direction)) {
    if (h.direction.at_infinity) {
      if (!coeff.is_zero()) return false;
    } else if (!(coeff % h.direction.minpoly).is_zero()) {
      return false;
    }
  }
  return true;
}

std::optional<Coordinate> distinguished_coordinate(const ThirdOrderPDE& f, const JetPoint& m1) {
  const MultiPoly g = fiber_restriction(f, m1);
  for (Coordinate c : kDistinguishedOrder) {
    if (g.degree_in(c) == 1) return c;
  }
  return std::nullopt;
}

std::vector<FiberValues> canonical_fiber_probes(std::optional<Coordinate> distinguished,
                                                std::uint64_t seed, std::size_t extra) {
  const Coordinate skip = distinguished.value_or(Coordinate::p222);
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < 4; ++k) {
    if (kThirdOrder[k] != skip) free.push_back(k);
  }
  std::vector<FiberValues> out;
  out.push_back(FiberValues{});
  for (std::size_t j = 0; j < 3; ++j) {
    FiberValues v{};
    v[free[j]] = 1;
    out.push_back(v);
  }
  Sampler s(seed);
  for (std::size_t i = 0; i < extra; ++i) {
    FiberValues v{};
    for (std::size_t k : free) v[k] = s.rational(5, 3);
    out.push_back(v);
  }
  return out;
}

JetPoint fiber_point(const JetPoint& m1, const FiberValues& v) {
  Point p = m1.full();
  for (std::size_t k = 0; k < 4; ++k) p[index(kThirdOrder[k])] = v[k];
  return JetPoint::from_point(2, p);
}

std::optional<FiberValues> solve_on_fiber(const ThirdOrderPDE& f, const JetPoint& m1,
                                          std::optional<Coordinate> distinguished,
                                          const FiberValues& probe) {
  const MultiPoly g = fiber_restriction(f, m1);
  auto substitute_except = [&](std::size_t slot) {
    std::array<bool, kNumCoordinates> mask{};
    Point values{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (k == slot) continue;
      mask[index(kThirdOrder[k])] = true;
      values[index(kThirdOrder[k])] = probe[k];
    }
    return g.partial_eval(mask, values);
  };
  if (distinguished) {
    const std::size_t slot = third_slot(*distinguished);
    const MultiPoly h = substitute_except(slot);
    const Rational kappa = h.derivative(*distinguished).constant_value();
    if (kappa == 0) return std::nullopt;
    FiberValues out = probe;
    out[slot] = -h.substitute(*distinguished, MultiPoly(0)).constant_value() / kappa;
    return out;
  }
  {
    Point p{};
    for (std::size_t k = 0; k < 4; ++k) p[index(kThirdOrder[k])] = probe[k];
    if (g.eval(p) == 0) return probe;
  }
  for (std::size_t slot = 0; slot < 4; ++slot) {
    const Coordinate c = kThirdOrder[slot];
    const MultiPoly h = substitute_except(slot);
    if (!h.uses(c)) continue;
    std::vector<Rational> coeffs(static_cast<std::size_t>(h.degree_in(c)) + 1);
    for (const auto& [mono, coeff] : h.terms()) coeffs[mono.exponent(c)] += coeff;
    const auto roots = decompose_roots(UPoly(coeffs));
    if (roots.rational.empty()) continue;
    FiberValues out = probe;
    out[slot] = roots.rational.front().value;
    return out;
  }
  return std::nullopt;
}

namespace {

void search_components(const std::vector<std::vector<RationalVector>>& candidates, std::size_t i,
                       std::vector<RationalVector>& chosen, std::vector<RationalMatrix>& found) {
  if (found.size() >= 16) return;
  if (i == candidates.size()) {
    const RationalMatrix m = RationalMatrix::from_rows(chosen, 5);
    if (rank(m) != 3) return;
    RationalMatrix r = rref(m);
    if (std::find(found.begin(), found.end(), r) == found.end()) found.push_back(std::move(r));
    return;
  }
  for (const auto& line : candidates[i]) {
    chosen.push_back(line);
    if (rank(RationalMatrix::from_rows(chosen, 5)) <= 3) search_components(candidates, i + 1, chosen, found);
    chosen.pop_back();
  }
}

ConeSample cone_from_points(const ThirdOrderPDE& f, const JetPoint& m1,
                            std::optional<Coordinate> distinguished,
                            const std::vector<FiberValues>& solved, std::vector<std::string> notes) {
  ConeSample out;
  out.base = m1;
  out.distinguished = distinguished;
  out.notes = std::move(notes);
  for (const auto& v : solved) {
    const JetPoint m2 = fiber_point(m1, v);
    if (std::find(out.points.begin(), out.points.end(), m2) != out.points.end()) continue;
    if (symbol(f).at(m2.full()).is_zero()) {
      out.notes.push_back("skipped a singular fibre point");
      continue;
    }
    out.points.push_back(m2);
    out.lines.push_back(characteristic_lines(f, m2));
  }
  if (out.points.size() < 4) {
    throw Error(ErrorCode::InsufficientSamples,
                "only " + std::to_string(out.points.size()) + " usable fibre points");
  }
  std::vector<std::vector<RationalVector>> candidates;
  bool all_exact = true;
  for (const auto& lines : out.lines) {
    std::vector<RationalVector> exact;
    for (const auto& l : lines) {
      if (l.exact()) exact.push_back(l.coords);
    }
    if (exact.empty()) all_exact = false;
    candidates.push_back(std::move(exact));
  }
  if (!all_exact) {
    out.notes.push_back("a fibre point has no rational characteristic line");
    return out;
  }
  std::vector<RationalVector> chosen;
  std::vector<RationalMatrix> found;
  search_components(candidates, 0, chosen, found);
  for (const auto& m : found) {
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    out.linear_components.push_back(Distribution::from_frame_rows(rows));
  }
  if (!out.linear_components.empty()) {
    out.linear_component = out.linear_components.front();
    const RationalMatrix span = found.front();
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < span.rows(); ++r) rows.push_back(span.row(r));
    for (auto& lines : out.lines) {
      for (auto& l : lines) {
        l.factor = l.exact() && in_span(rows, l.coords) ? FactorKind::Linear : FactorKind::Quadratic;
      }
    }
  }
  return out;
}

JetPoint level1(const JetPoint& m1) {
  if (m1.level() < 1) throw Error(ErrorCode::InvalidArgument, "cone sampling needs a level-1 point");
  return m1.project(1);
}

}  // namespace

ConeSample cone_sample(const ThirdOrderPDE& f, const JetPoint& m1_in, const std::vector<FiberValues>& samples) {
  const JetPoint m1 = level1(m1_in);
  const auto dist = distinguished_coordinate(f, m1);
  std::vector<FiberValues> solved;
  std::vector<std::string> notes;
  for (const auto& s : samples) {
    if (auto v = solve_on_fiber(f, m1, dist, s)) {
      solved.push_back(*v);
    } else {
      notes.push_back("a sample could not be moved onto the equation");
    }
  }
  return cone_from_points(f, m1, dist, solved, std::move(notes));
}

ConeSample cone_sample(const ThirdOrderPDE& f, const JetPoint& m1_in, std::uint64_t seed) {
  const JetPoint m1 = level1(m1_in);
  if (fiber_restriction(f, m1).max_level() < 2) {
    throw Error(ErrorCode::ZeroSymbol, "F does not depend on third derivatives over this point");
  }
  const auto dist = distinguished_coordinate(f, m1);
  std::vector<FiberValues> solved;
  std::vector<std::string> notes;
  auto usable = [&](const FiberValues& v) {
    return !symbol(f).at(fiber_point(m1, v).full()).is_zero();
  };
  std::size_t usable_count = 0;
  for (const auto& probe : canonical_fiber_probes(dist, seed)) {
    if (auto v = solve_on_fiber(f, m1, dist, probe)) {
      solved.push_back(*v);
      if (usable(*v)) ++usable_count;
    }
  }
  // Top up with further random probes when canonical ones land on degenerate points.
  Sampler extra(seed ^ 0x5bd1e995ULL);
  for (int attempt = 0; attempt < 64 && usable_count < 8; ++attempt) {
    FiberValues probe{};
    for (auto& x : probe) x = extra.rational(7, 4);
    if (auto v = solve_on_fiber(f, m1, dist, probe)) {
      solved.push_back(*v);
      if (usable(*v)) ++usable_count;
    }
  }
  return cone_from_points(f, m1, dist, solved, std::move(notes));
}

}  // namespace mae
