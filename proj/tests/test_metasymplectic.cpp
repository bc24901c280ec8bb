#include <doctest.h>

#include "mae/errors.hpp"
#include "mae/metasymplectic.hpp"
#include "test_support.hpp"

using namespace mae;
using namespace mae::test;

namespace {

VectorField fr(const RationalVector& r) { return VectorField::frame(r[0], r[1], r[2], r[3], r[4]); }

LDualElement line(Rational c1, Rational c2) { return {MultiPoly(c1), MultiPoly(c2)}; }

const Distribution& piano1() {
  static const Distribution d = frame_distribution({{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 2, 0, 1}});
  return d;
}
const Distribution& piano2() {
  static const Distribution d = frame_distribution({{1, 1, 0, 0, 0}, {0, 0, 2, 1, 0}, {0, 0, 0, 0, 1}});
  return d;
}
const Distribution& piano3() {
  static const Distribution d = frame_distribution({{1, -2, 0, 0, 0}, {0, 0, 1, -1, 0}, {0, 0, 0, 0, 1}});
  return d;
}

// D = <a D1 + b D2 + f, ker(dp11 - (k1+k2) dp12 + k1 k2 dp22)>.
Distribution with_roots(const MultiPoly& a, const MultiPoly& b, const std::array<MultiPoly, 3>& f,
                        const MultiPoly& k1, const MultiPoly& k2) {
  return Distribution({VectorField::frame(a, b, f[0], f[1], f[2]),
                       VectorField::frame(0, 0, -(k1 * k2), 0, 1),
                       VectorField::frame(0, 0, k1 + k2, 1, 0)});
}

}  // namespace

TEST_CASE("omega bilinear examples") {
  const LDualElement w = omega_bilinear(total_derivative(1), fr({0, 0, 2, 1, 0}));
  CHECK(w == line(2, 1));
  const VectorField x = fr({1, 1, 0, 0, 0});
  CHECK(omega_bilinear(x, x).is_zero());
  CHECK(omega_bilinear(x, fr({0, 0, 1, -1, 0})) == line(0, -1));
}

TEST_CASE("omega trilinear examples") {
  const VectorField d1 = total_derivative(1);
  const VectorField v = fr({0, 0, 2, 1, 0});
  CHECK(omega_trilinear(d1, v, fr({1, -2, 0, 0, 0})).is_zero());
  CHECK(omega_trilinear(d1, v, fr({1, 1, 0, 0, 0})) == MultiPoly(3));
  CHECK(omega_trilinear(v, v, d1).is_zero());
}

TEST_CASE("canonical lines of the example") {
  // Omega of the D1-horizontal generator with vertical generators of D2, D3, and so on.
  CHECK(same_line(omega_bilinear(fr({1, 0, 0, 0, 0}), fr({0, 0, 2, 1, 0})), line(2, 1)));
  CHECK(same_line(omega_bilinear(fr({1, 0, 0, 0, 0}), fr({0, 0, 1, -1, 0})), line(1, -1)));
  CHECK(same_line(omega_bilinear(fr({1, 1, 0, 0, 0}), fr({0, 0, 1, -1, 0})), line(0, 1)));
}

TEST_CASE("threefold orthogonality") {
  CHECK(is_threefold_orthogonal(piano1(), piano2(), piano3()));
  CHECK(is_threefold_orthogonal(piano3(), piano1(), piano2()));
  const auto dd = frame_distribution({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
  // Omega(D1, d/dp11) = dx1 pairs with D1 itself: the degenerate triple is not orthogonal.
  CHECK_FALSE(is_threefold_orthogonal(dd, dd, dd));
  const auto p111 = frame_distribution({{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(is_threefold_orthogonal(p111, p111, p111));
  const auto vert = frame_distribution({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(is_threefold_orthogonal(vert, vert, piano1()));
}

TEST_CASE("characteristic lines of covectors") {
  const auto [h1, h2] = characteristic_lines_of_covector({1, -5, 6});
  CHECK((same_line(h1, line(3, 1)) || same_line(h1, line(2, 1))));
  CHECK((same_line(h2, line(3, 1)) || same_line(h2, line(2, 1))));
  CHECK_FALSE(same_line(h1, h2));

  const auto [a1, a2] = characteristic_lines_of_covector({0, 1, 0});
  CHECK(same_line(a1, line(1, 0)));
  CHECK(same_line(a2, line(0, 1)));

  const auto [s1, s2] = characteristic_lines_of_covector({1, 0, 0});
  CHECK(same_line(s1, line(0, 1)));
  CHECK(same_line(s2, line(0, 1)));

  CHECK_THROWS_AS(characteristic_lines_of_covector({1, 0, 1}), Error);
  CHECK_THROWS_AS(characteristic_lines_of_covector({1, 0, -2}), Error);

  // symbolic roots k = p11 and k = 2
  const MultiPoly k = MultiPoly::var(Coordinate::p11);
  const auto [q1, q2] = characteristic_lines_of_covector({1, -(k + 2), k * Rational(2)});
  CHECK((same_line(q1, {k, 1}) || same_line(q1, {2, 1})));
  CHECK((same_line(q2, {k, 1}) || same_line(q2, {2, 1})));
}

TEST_CASE("orthogonal complement pairs of the example") {
  const auto [d2, d3] = orthogonal_complement_pair(piano1());
  const bool direct = same_span(d2, piano2()) && same_span(d3, piano3());
  const bool swapped = same_span(d2, piano3()) && same_span(d3, piano2());
  CHECK((direct || swapped));
  CHECK(is_threefold_orthogonal(piano1(), d2, d3));

  const auto p122 = frame_distribution({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
  const auto expected = frame_distribution({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}});
  const auto [e2, e3] = orthogonal_complement_pair(p122);
  CHECK(same_span(e2, expected));
  CHECK(same_span(e3, expected));

  const auto p111 = frame_distribution({{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  const auto [f2, f3] = orthogonal_complement_pair(p111);
  CHECK(same_span(f2, p111));
  CHECK(same_span(f3, p111));

  const auto vert = frame_distribution({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK_THROWS_AS(orthogonal_complement_pair(vert), Error);
}

TEST_CASE("complement pairs on random distributions") {
  Sampler s(31);
  for (int t = 0; t < 25; ++t) {
    const MultiPoly a = random_level1_poly(s, 2, 1) + MultiPoly(s.nonzero_rational(3, 1));
    const MultiPoly b = random_level1_poly(s, 2, 1);
    const std::array<MultiPoly, 3> f{random_level1_poly(s, 2, 1), random_level1_poly(s, 2, 1),
                                     random_level1_poly(s, 1, 1)};
    const MultiPoly k1 = t % 3 == 0 ? MultiPoly::var(Coordinate::p12) : MultiPoly(s.rational(3, 2));
    const MultiPoly k2 = MultiPoly(s.rational(3, 2)) + (t % 2 == 0 ? MultiPoly::var(Coordinate::u) : 0);
    const Distribution d1 = with_roots(a, b, f, k1, k2);
    REQUIRE(d1.generic_rank() == 3);
    const auto [d2, d3] = orthogonal_complement_pair(d1);
    CHECK(d2.generic_rank() == 3);
    CHECK(d3.generic_rank() == 3);
    CHECK(is_threefold_orthogonal(d1, d2, d3));
    CHECK(vertical_part(d2).generic_rank() == 2);
    CHECK(vertical_part(d3).generic_rank() == 2);

    const auto [e1, e3] = orthogonal_complement_pair(d2);
    const bool direct = same_span(e1, d1) && same_span(e3, d3);
    const bool swapped = same_span(e1, d3) && same_span(e3, d1);
    CHECK((direct || swapped));
  }
}

TEST_CASE("omega properties") {
  Sampler s(17);
  for (int t = 0; t < 20; ++t) {
    const VectorField x = random_frame_field(s);
    const VectorField y = random_frame_field(s);
    const VectorField z = random_frame_field(s);
    const MultiPoly g = random_level1_poly(s, 2, 1);
    const LDualElement xy = omega_bilinear(x, y);
    const LDualElement yx = omega_bilinear(y, x);
    CHECK((xy.c1 + yx.c1).is_zero());
    CHECK((xy.c2 + yx.c2).is_zero());
    const LDualElement sum = omega_bilinear(x + z * g, y);
    const LDualElement zy = omega_bilinear(z, y);
    CHECK(sum.c1 == xy.c1 + zy.c1 * g);
    CHECK(sum.c2 == xy.c2 + zy.c2 * g);
    CHECK(omega_trilinear(x, x, y).is_zero());
    FrameComponents vx = x.frame(), vy = y.frame(), vz = z.frame();
    vx[0] = vx[1] = vy[0] = vy[1] = vz[0] = vz[1] = MultiPoly();
    CHECK(omega_trilinear(VectorField::frame(vx), VectorField::frame(vy), VectorField::frame(vz)).is_zero());
  }
  // xi_1, xi_2 span a Lagrangian plane for symbolic third derivatives
  CHECK(omega_bilinear(VectorField::frame(symbolic_xi(1)), VectorField::frame(symbolic_xi(2))).is_zero());
}
