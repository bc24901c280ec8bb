#include <doctest.h>

#include <cmath>

#include "mae/errors.hpp"
#include "mae/symbol_cone.hpp"
#include "test_support.hpp"

using namespace mae;
using namespace mae::test;

namespace {

JetPoint at(std::initializer_list<std::pair<const char*, Rational>> values, int level = 2) {
  JetPoint p = JetPoint::zero(level);
  for (const auto& [n, v] : values) p = p.with(*coordinate_from_name(n), v);
  return p;
}

// Independent oracle: evaluate F on m2 + t alpha^3 for deg+1 values of t.
bool strong_by_sampling(const MultiPoly& f, const JetPoint& m2, const std::array<Rational, 2>& nu) {
  const Rational a1 = -nu[1];
  const Rational a2 = nu[0];
  const std::array<Rational, 4> cube = {a1 * a1 * a1, a1 * a1 * a2, a1 * a2 * a2, a2 * a2 * a2};
  for (int t = 0; t <= f.degree() + 1; ++t) {
    Point p = m2.full();
    for (std::size_t k = 0; k < 4; ++k) p[index(kThirdOrder[k])] += Rational(t) * cube[k];
    if (f.eval(p) != 0) return false;
  }
  return true;
}

// Symbol evaluated on a covector alpha, straight from the partial derivatives.
Rational symbol_on(const MultiPoly& f, const JetPoint& m2, const Rational& a1, const Rational& a2) {
  const Point& p = m2.full();
  return f.derivative(Coordinate::p111).eval(p) * a1 * a1 * a1 +
         f.derivative(Coordinate::p112).eval(p) * a1 * a1 * a2 +
         f.derivative(Coordinate::p122).eval(p) * a1 * a2 * a2 +
         f.derivative(Coordinate::p222).eval(p) * a2 * a2 * a2;
}

JetPoint random_point_on(const MultiPoly& f, Sampler& s) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    const JetPoint m1 = JetPoint::from_point(1, s.point(5, 2));
    FiberValues probe{};
    for (auto& x : probe) x = s.rational(5, 2);
    const auto dist = distinguished_coordinate(f, m1);
    if (auto v = solve_on_fiber(f, m1, dist, probe)) {
      const JetPoint m2 = fiber_point(m1, *v);
      if (!symbol(f).at(m2.full()).is_zero()) return m2;
    }
  }
  FAIL("no point found on the equation");
  return JetPoint::zero(2);
}

}  // namespace

TEST_CASE("symbol examples") {
  CHECK(symbol(parse_expr("p111 - p112 - 2*p122"), JetPoint::zero(2)) == BinaryCubic{1, -1, -2, 0});
  CHECK(symbol(parse_expr("p111"), JetPoint::zero(2)) == BinaryCubic{1, 0, 0, 0});
  CHECK(symbol(parse_expr("p112*p222 - p122^2"), at({{"p112", 1}})) == BinaryCubic{0, 0, 0, 1});
  CHECK_THROWS_AS(symbol(parse_expr("p112*p222"), JetPoint::zero(2)), Error);
}

TEST_CASE("characteristic polynomial examples") {
  const auto c = char_poly(parse_expr("p111 - p112 - 2*p122"), JetPoint::zero(2));
  // -[(nu2)^3 + (nu2)^2 nu1 - 2 nu2 (nu1)^2]
  CHECK(c.c == std::array<Rational, 4>{0, 2, -1, -1});
  const auto p122 = char_poly(parse_expr("p122"), JetPoint::zero(2));
  CHECK(p122.c == std::array<Rational, 4>{0, -1, 0, 0});
  const auto p222 = char_poly(parse_expr("p222"), JetPoint::zero(2));
  CHECK(p222.c == std::array<Rational, 4>{1, 0, 0, 0});
}

TEST_CASE("discriminant classification") {
  CHECK(discriminant(BinaryCubic{1, -1, -2, 0}) == 36);
  CHECK(discriminant_classify(BinaryCubic{1, -1, -2, 0}) == CubicType::ThreeDistinct);
  CHECK(discriminant_classify(BinaryCubic{1, 0, 0, 0}) == CubicType::RepeatedLinear);
  CHECK(discriminant_classify(BinaryCubic{0, 0, 0, 1}) == CubicType::RepeatedLinear);
  // xi1^3 + xi1 xi2^2 = xi1 (xi1^2 + xi2^2)
  CHECK(discriminant_classify(BinaryCubic{1, 0, 1, 0}) == CubicType::OneRealIrreducibleQuadratic);
}

TEST_CASE("factor cubic examples") {
  const auto split = factor_cubic(BinaryCubic{1, -1, -2, 0});
  CHECK(split.exact);
  CHECK(split.linear == std::array<Rational, 2>{1, 0});
  REQUIRE(split.roots.size() == 3);
  std::vector<Rational> s;
  for (const auto& r : split.roots) s.push_back(r.nu()[1]);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<Rational>{-2, 0, 1});

  const auto cube = factor_cubic(BinaryCubic{1, 6, 12, 8});
  CHECK(cube.linear == std::array<Rational, 2>{1, 2});
  CHECK(cube.quadratic == std::array<Rational, 3>{1, 4, 4});
  REQUIRE(cube.roots.size() == 1);
  CHECK(cube.roots[0].multiplicity == 3);

  const auto top = factor_cubic(BinaryCubic{0, 0, 0, 1});
  CHECK(top.linear == std::array<Rational, 2>{0, 1});
  CHECK(top.quadratic == std::array<Rational, 3>{0, 0, 1});

  // xi1^3 + 2 xi2^3 has a single irrational real direction.
  const auto irr = factor_cubic(BinaryCubic{1, 0, 0, 2});
  CHECK_FALSE(irr.exact);
  const double l = irr.linear_approx[1];
  const auto& q = irr.quadratic_approx;
  CHECK(std::abs(q[0] - 1) < 1e-9);
  CHECK(std::abs(q[1] + l * q[0] - 0) < 1e-9);
  CHECK(std::abs(q[2] + l * q[1] - 0) < 1e-9);
  CHECK(std::abs(l * q[2] - 2) < 1e-9);
}

TEST_CASE("factor cubic reconstructs the cubic") {
  Sampler s(11);
  for (int i = 0; i < 200; ++i) {
    BinaryCubic c{s.rational(4, 3), s.rational(4, 3), s.rational(4, 3), s.rational(4, 3)};
    if (i % 3 == 0) {
      // Force a rational linear factor.
      const Rational l = s.rational(3, 2), m = s.rational(3, 2);
      const Rational q0 = s.rational(3, 2), q1 = s.rational(3, 2), q2 = s.rational(3, 2);
      c = {l * q0, l * q1 + m * q0, l * q2 + m * q1, m * q2};
    }
    if (c.is_zero()) continue;
    const auto f = factor_cubic(c);
    if (f.exact) {
      const auto& [l, m] = f.linear;
      const auto& q = f.quadratic;
      CHECK(BinaryCubic{l * q[0], l * q[1] + m * q[0], l * q[2] + m * q[1], m * q[2]} == c);
    } else {
      const auto& [l, m] = f.linear_approx;
      const auto& q = f.quadratic_approx;
      CHECK(std::abs(l * q[0] - c.a.get_d()) < 1e-9);
      CHECK(std::abs(l * q[1] + m * q[0] - c.b.get_d()) < 1e-9);
      CHECK(std::abs(l * q[2] + m * q[1] - c.c.get_d()) < 1e-9);
      CHECK(std::abs(m * q[2] - c.d.get_d()) < 1e-9);
    }
    int total = 0;
    for (const auto& r : f.roots) total += r.multiplicity;
    if (discriminant(c) > 0) {
      CHECK(f.roots.size() == 3);
      CHECK(total == 3);
    }
    if (discriminant(c) < 0) CHECK(f.roots.size() == 1);
  }
}

TEST_CASE("characteristic lines of the split example") {
  const auto lines = characteristic_lines(parse_expr("p111 - p112 - 2*p122"), JetPoint::zero(2));
  REQUIRE(lines.size() == 3);
  const std::vector<RationalVector> expected = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, -2, 0, 0, 0}};
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& l : lines) found = found || l.coords == e;
    CHECK(found);
  }
  for (const auto& l : lines) CHECK(l.multiplicity() == 1);
}

TEST_CASE("characteristic lines with multiplicity") {
  const auto p111 = characteristic_lines(parse_expr("p111"), JetPoint::zero(2));
  REQUIRE(p111.size() == 1);
  CHECK(p111[0].multiplicity() == 3);
  CHECK(p111[0].coords == RationalVector{1, 0, 0, 0, 0});

  const auto goursat = characteristic_lines(parse_expr("p112*p222 - p122^2"), at({{"p112", 1}}));
  REQUIRE(goursat.size() == 1);
  CHECK(goursat[0].coords == RationalVector{0, 1, 1, 0, 0});
  CHECK(goursat[0].multiplicity() == 3);

  const auto p122 = characteristic_lines(parse_expr("p122"), JetPoint::zero(2));
  REQUIRE(p122.size() == 2);
  std::vector<int> mult{p122[0].multiplicity(), p122[1].multiplicity()};
  CHECK(mult == std::vector<int>{1, 2});

  CHECK_THROWS_AS(characteristic_lines(parse_expr("p111 - 1"), JetPoint::zero(2)), Error);
}

TEST_CASE("strong characteristic examples") {
  const MultiPoly g = parse_expr("p112*p222 - p122^2");
  const JetPoint m2 = at({{"p112", 1}});
  const auto lines = characteristic_lines(g, m2);
  REQUIRE(lines.size() == 1);
  CHECK(is_strong_characteristic(g, lines[0], m2));

  const MultiPoly f = parse_expr("p111 + p112^2");
  const JetPoint n2 = at({{"p111", -1}, {"p112", 1}});
  const auto fl = characteristic_lines(f, n2);
  REQUIRE(fl.size() == 2);
  int strong = 0;
  int weak = 0;
  for (const auto& l : fl) {
    const bool s = is_strong_characteristic(f, l, n2);
    CHECK(s == strong_by_sampling(f, n2, l.direction.nu()));
    (s ? strong : weak) += 1;
  }
  CHECK(strong == 1);
  CHECK(weak == 1);

  CharLine off = lines[0];
  off.coords = {1, 0, 5, 0, 0};
  CHECK_THROWS_AS(is_strong_characteristic(g, off, m2), Error);
}

TEST_CASE("char poly and symbol zero sets correspond") {
  Sampler s(23);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly f = random_boillat(s);
    const JetPoint m2 = random_point_on(f, s);
    const auto cp = char_poly(f, m2);
    for (const auto& l : characteristic_lines(f, m2)) {
      if (!l.exact()) continue;
      const auto nu = l.direction.nu();
      CHECK(cp.eval(nu[0], nu[1]) == 0);
      CHECK(symbol_on(f, m2, -nu[1], nu[0]) == 0);
    }
  }
}

TEST_CASE("lines lie in the Lagrangian plane") {
  Sampler s(29);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly f = random_boillat(s);
    const JetPoint m2 = random_point_on(f, s);
    const LagrangianPlane plane(m2);
    for (const auto& l : characteristic_lines(f, m2)) {
      if (!l.exact()) continue;
      const auto m = RationalMatrix::from_rows({plane.xi(1), plane.xi(2), l.coords}, 5);
      CHECK(rank(m) == 2);
    }
  }
}

TEST_CASE("Monge-Ampere equations are strongly characteristic") {
  Sampler s(31);
  int checked_irrational = 0;
  for (int i = 0; i < 40; ++i) {
    const MultiPoly f = random_boillat(s);
    const JetPoint m2 = random_point_on(f, s);
    for (const auto& l : characteristic_lines(f, m2)) {
      CHECK(is_strong_characteristic(f, l, m2));
      if (l.exact()) {
        CHECK(strong_by_sampling(f, m2, l.direction.nu()));
      } else {
        ++checked_irrational;
      }
    }
  }
  CHECK(checked_irrational > 0);
}

TEST_CASE("cone of the split quasi-linear example") {
  const auto cone = cone_sample(parse_expr("p111 - p112 - 2*p122"), JetPoint::zero(1), kDefaultSeed);
  CHECK(cone.distinguished == Coordinate::p111);
  CHECK(cone.points.size() >= 4);
  REQUIRE(cone.linear_component.has_value());
  CHECK(same_span(*cone.linear_component, piano(1)));
  REQUIRE(cone.linear_components.size() == 3);
  for (int i = 1; i <= 3; ++i) {
    int hits = 0;
    for (const auto& d : cone.linear_components) hits += same_span(d, piano(i)) ? 1 : 0;
    CHECK(hits == 1);
  }
}

TEST_CASE("cone of a linear Goursat equation") {
  const auto cone = cone_sample(parse_expr("p112*p222 - p122^2"), JetPoint::zero(1), kDefaultSeed);
  REQUIRE(cone.linear_component.has_value());
  CHECK(cone.linear_components.size() == 1);
  CHECK(same_span(*cone.linear_component,
                  frame_distribution({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}})));
  // Every line in the linear component meets it; the others are labelled quadratic.
  for (std::size_t i = 0; i < cone.points.size(); ++i) {
    for (const auto& l : cone.lines[i]) {
      const auto m = RationalMatrix::from_rows(
          {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, l.coords}, 5);
      CHECK((rank(m) == 3) == (l.factor == FactorKind::Linear));
    }
  }
}

TEST_CASE("cone without a linear component") {
  const auto cone = cone_sample(parse_expr("p111 + p112^2"), JetPoint::zero(1), kDefaultSeed);
  CHECK_FALSE(cone.linear_component.has_value());
  CHECK(cone.linear_components.empty());
}

TEST_CASE("cone sampling needs enough points") {
  const MultiPoly f = parse_expr("p111 - p112 - 2*p122");
  CHECK_THROWS_AS(cone_sample(f, JetPoint::zero(1), std::vector<FiberValues>{FiberValues{}}), Error);
  try {
    cone_sample(f, JetPoint::zero(1), std::vector<FiberValues>{FiberValues{}, FiberValues{}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientSamples);
  }
}

TEST_CASE("cone lines of E_D meet D") {
  // Constant-coefficient MAEs built from random Boillat data; each linear component must
  // contain a characteristic line at every sampled point.
  Sampler s(37);
  for (int i = 0; i < 10; ++i) {
    const MultiPoly f = random_boillat(s, 1, 0);
    ConeSample cone;
    try {
      cone = cone_sample(f, JetPoint::zero(1), kDefaultSeed + static_cast<std::uint64_t>(i));
    } catch (const Error&) {
      continue;
    }
    for (const auto& d : cone.linear_components) {
      const auto rows = frame_rref(d);
      for (const auto& lines : cone.lines) {
        bool meets = false;
        for (const auto& l : lines) {
          if (!l.exact()) continue;
          std::vector<RationalVector> all;
          for (std::size_t r = 0; r < rows.rows(); ++r) all.push_back(rows.row(r));
          all.push_back(l.coords);
          meets = meets || rank(RationalMatrix::from_rows(all, 5)) == 3;
        }
        CHECK(meets);
      }
    }
  }
}
