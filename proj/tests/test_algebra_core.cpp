#include <doctest.h>

#include "mae/errors.hpp"
#include "mae/linalg.hpp"
#include "mae/parser.hpp"
#include "mae/sampling.hpp"
#include "mae/upoly.hpp"

using namespace mae;

namespace {

MultiPoly random_poly(Sampler& s, int terms, int max_deg) {
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int deg = static_cast<int>(s.integer(0, max_deg));
    for (int k = 0; k < deg; ++k) m.exps[static_cast<std::size_t>(s.integer(0, 11))] += 1;
    p += MultiPoly::term(m, s.rational(5, 3));
  }
  return p;
}

}  // namespace

TEST_CASE("parse examples") {
  const MultiPoly f = parse_expr("p111 - p112 - 2*p122");
  CHECK(f.terms().size() == 3);
  CHECK(f.coefficient(Monomial::of(Coordinate::p122)) == -2);
  CHECK(parse_expr("0").is_zero());

  const MultiPoly hankel = parse_expr("p112*p222 - p122^2");
  const MultiPoly by_hand = MultiPoly::var(Coordinate::p112) * MultiPoly::var(Coordinate::p222) -
                            MultiPoly::var(Coordinate::p122) * MultiPoly::var(Coordinate::p122);
  CHECK(hankel == by_hand);
  CHECK(parse_expr("(x1 + 1/2)^2") == parse_expr("x1^2 + x1 + 1/4"));
  CHECK(parse_expr("2 * 3/6 * u") == MultiPoly::var(Coordinate::u));
}

TEST_CASE("parse errors") {
  try {
    parse_expr("p11 + * p12");
    FAIL("expected syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 6);
  }
  try {
    parse_expr("p13 + 1");
    FAIL("expected unknown variable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
  }
  CHECK_THROWS_AS(parse_expr("(p11"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("1/0"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("p11 p12"), SyntaxError);
}

TEST_CASE("printing is canonical and reparses") {
  CHECK(parse_expr("-2*p122 + p111 - p112").to_string() == "p111 - p112 - 2*p122");
  CHECK(parse_expr("p122^2 - p112*p222").to_string() == "-p112*p222 + p122^2");
  Sampler s(7);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = random_poly(s, 6, 4);
    const std::string printed = p.to_string();
    const MultiPoly q = parse_expr(printed);
    CHECK(q == p);
    CHECK(q.to_string() == printed);
  }
}

TEST_CASE("derivatives") {
  CHECK(parse_expr("p111 - p112 - 2*p122").derivative(Coordinate::p122) == MultiPoly(-2));
  CHECK(MultiPoly(Rational(5, 3)).derivative(Coordinate::x1).is_zero());
  CHECK(parse_expr("p112*p222 - p122^2").derivative(Coordinate::p122) == parse_expr("-2*p122"));
  Sampler s(11);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = random_poly(s, 8, 5);
    for (auto v : kAllCoordinates) {
      for (auto w : kAllCoordinates) {
        CHECK(p.derivative(v).derivative(w) == p.derivative(w).derivative(v));
      }
    }
  }
}

TEST_CASE("evaluation") {
  Point pt{};
  pt[index(Coordinate::p111)] = 3;
  pt[index(Coordinate::p112)] = 1;
  pt[index(Coordinate::p122)] = 1;
  CHECK(parse_expr("p111 - p112 - 2*p122").eval(pt) == 0);
  CHECK(parse_expr("x1*u + 7/2").eval(Point{}) == Rational(7, 2));
  Point q{};
  q[index(Coordinate::p112)] = 1;
  CHECK(parse_expr("p112*p222 - p122^2").eval(q) == 0);
}

TEST_CASE("ring axioms on random polynomials") {
  Sampler s(3);
  for (int i = 0; i < 60; ++i) {
    const MultiPoly a = random_poly(s, 5, 3);
    const MultiPoly b = random_poly(s, 5, 3);
    const MultiPoly c = random_poly(s, 5, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    // evaluation is a ring homomorphism
    const Point p = s.point();
    CHECK((a * b + c).eval(p) == a.eval(p) * b.eval(p) + c.eval(p));
  }
}

TEST_CASE("square root and exact division") {
  Sampler s(5);
  for (int i = 0; i < 40; ++i) {
    const MultiPoly a = random_poly(s, 4, 2);
    const MultiPoly b = random_poly(s, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    auto root = (a * a).sqrt();
    REQUIRE(root.has_value());
    CHECK((*root == a || *root == -a));
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  CHECK_FALSE(parse_expr("x1^2 + 1").sqrt().has_value());
  CHECK_FALSE(parse_expr("x1 + 1").divide_exact(parse_expr("x2")).has_value());
}

TEST_CASE("rank and kernel") {
  RationalMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  auto rk = rank_kernel(id);
  CHECK(rk.rank == 3);
  CHECK(rk.kernel_basis.empty());

  // M_i for k = (0, 1, -2), i = 1.
  const Rational k1 = 0, k2 = 1, k3 = -2;
  const Rational s1 = k1 + k2 + k3, s2 = k1 * k2 + k1 * k3 + k2 * k3, s3 = k1 * k2 * k3;
  const auto m = RationalMatrix::from_rows(
      {{-s1 + k1, -s2, -s3}, {1, k1, 0}, {0, 1, k1}}, 3);
  rk = rank_kernel(m);
  CHECK(rk.rank == 2);
  REQUIRE(rk.kernel_basis.size() == 1);
  CHECK(rk.kernel_basis[0] == RationalVector{0, 0, 1});

  CHECK(rank(RationalMatrix::from_rows({{1, 0, 0, 0, 0}, {2, 0, 0, 0, 0}}, 5)) == 1);

  Sampler s(9);
  for (int t = 0; t < 100; ++t) {
    const auto rows = static_cast<std::size_t>(s.integer(1, 6));
    const auto cols = static_cast<std::size_t>(s.integer(1, 6));
    RationalMatrix a(rows, cols);
    // low-rank products make rank deficiency common
    const auto inner = static_cast<std::size_t>(s.integer(1, 4));
    RationalMatrix l(rows, inner), r(inner, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < inner; ++k) l(i, k) = s.rational(3, 2);
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) r(k, j) = s.rational(3, 2);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) a(i, j) += l(i, k) * r(k, j);
    const auto res = rank_kernel(a);
    CHECK(res.rank == rank(a));
    CHECK(res.rank + res.kernel_basis.size() == cols);
    CHECK(res.rank <= inner);
    for (const auto& v : res.kernel_basis) {
      for (std::size_t i = 0; i < rows; ++i) CHECK(dot(a.row(i), v) == 0);
    }
  }
}

TEST_CASE("univariate roots") {
  // (s - 1/2)^2 (s + 3) (s^2 - 2)
  const UPoly p = UPoly({Rational(-1, 2), 1}) * UPoly({Rational(-1, 2), 1}) * UPoly({3, 1}) *
                  UPoly({-2, 0, 1});
  const auto r = decompose_roots(p);
  REQUIRE(r.rational.size() == 2);
  CHECK(r.rational[0].value == -3);
  CHECK(r.rational[0].multiplicity == 1);
  CHECK(r.rational[1].value == Rational(1, 2));
  CHECK(r.rational[1].multiplicity == 2);
  REQUIRE(r.irrational.size() == 2);
  CHECK(r.irrational[0].minpoly == UPoly({-2, 0, 1}));
  CHECK(r.irrational[0].approx == doctest::Approx(-1.41421356237));
  CHECK(r.irrational[1].approx == doctest::Approx(1.41421356237));

  // s^3 - 2 has one real irrational root
  const auto c = decompose_roots(UPoly({-2, 0, 0, 1}));
  CHECK(c.rational.empty());
  REQUIRE(c.irrational.size() == 1);
  CHECK(c.irrational[0].approx == doctest::Approx(1.25992104989));

  // large leading coefficient: 1000003 s - 7
  const auto big = decompose_roots(UPoly({-7, 1000003}));
  REQUIRE(big.rational.size() == 1);
  CHECK(big.rational[0].value == Rational(7, 1000003));
}
