#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mae/jet.hpp"
#include "mae/sampling.hpp"
#include "mae/upoly.hpp"

namespace mae {

// E = {F = 0} for a polynomial F in all 12 coordinates.
using ThirdOrderPDE = MultiPoly;

// a xi1^3 + b xi1^2 xi2 + c xi1 xi2^2 + d xi2^3
struct BinaryCubic {
  Rational a, b, c, d;
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool operator==(const BinaryCubic&) const = default;
};

struct SymbolicCubic {
  MultiPoly a, b, c, d;
  BinaryCubic at(const Point& p) const { return {a.eval(p), b.eval(p), c.eval(p), d.eval(p)}; }
};

SymbolicCubic symbol(const ThirdOrderPDE& f);
BinaryCubic symbol(const ThirdOrderPDE& f, const JetPoint& m2);

// Coefficients of (nu1)^3, (nu1)^2 nu2, nu1 (nu2)^2, (nu2)^3.
struct HomogeneousCubic {
  std::array<Rational, 4> c;
  Rational eval(const Rational& nu1, const Rational& nu2) const;
  bool operator==(const HomogeneousCubic&) const = default;
};
HomogeneousCubic char_poly(const ThirdOrderPDE& f, const JetPoint& m2);
HomogeneousCubic char_poly(const BinaryCubic& s);

enum class CubicType { ThreeDistinct, RepeatedLinear, OneRealIrreducibleQuadratic };
Rational discriminant(const BinaryCubic& c);
CubicType discriminant_classify(const BinaryCubic& c);
const char* cubic_type_name(CubicType t);

// A characteristic direction nu = (1, s) with s a real root of `minpoly`, or nu = (0, 1).
// Equivalently the linear symbol factor xi1 + s xi2, or xi2.
struct Direction {
  bool at_infinity = false;
  UPoly minpoly;
  double approx = 0.0;
  int multiplicity = 1;

  bool exact() const { return at_infinity || minpoly.degree() == 1; }
  // Requires exact().
  std::array<Rational, 2> nu() const;
  std::array<double, 2> nu_approx() const;
};

// All real characteristic directions, rational ones first (by height), then irrational ones.
std::vector<Direction> characteristic_directions(const BinaryCubic& c);

struct CubicFactorization {
  bool exact = true;
  std::array<Rational, 2> linear;     // (lambda, mu) for lambda xi1 + mu xi2
  std::array<Rational, 3> quadratic;  // q0 xi1^2 + q1 xi1 xi2 + q2 xi2^2
  std::array<double, 2> linear_approx{};
  std::array<double, 3> quadratic_approx{};
  std::vector<Direction> roots;       // every real direction with multiplicity
};
CubicFactorization factor_cubic(const BinaryCubic& c);

enum class FactorKind { Linear, Quadratic };
const char* factor_name(FactorKind k);

struct CharLine {
  Direction direction;
  FactorKind factor = FactorKind::Linear;
  // Frame coordinates of nu1 xi1 + nu2 xi2, first nonzero entry 1; empty when inexact.
  RationalVector coords;
  std::array<double, 5> approx{};
  bool exact() const { return direction.exact(); }
  int multiplicity() const { return direction.multiplicity; }
};

std::vector<CharLine> characteristic_lines(const ThirdOrderPDE& f, const JetPoint& m2);
bool is_strong_characteristic(const ThirdOrderPDE& f, const CharLine& h, const JetPoint& m2);

// F(m2 + t alpha^3) as coefficients in t, each a polynomial in the direction parameter s.
std::vector<UPoly> restriction_to_prolongation(const ThirdOrderPDE& f, const JetPoint& m2,
                                               const Direction& dir);

using FiberValues = std::array<Rational, 4>;  // (p111, p112, p122, p222)

// The first third-order coordinate, in the order p111, p222, p112, p122, in which F is affine.
std::optional<Coordinate> distinguished_coordinate(const ThirdOrderPDE& f, const JetPoint& m1);

// Four canonical probes (unit patterns on the non-distinguished coordinates) then `extra` random ones.
std::vector<FiberValues> canonical_fiber_probes(std::optional<Coordinate> distinguished,
                                                std::uint64_t seed, std::size_t extra = 4);

// Moves a probe onto E over m1: solves for the distinguished coordinate, or for a rational
// root in some third-order coordinate when F is not affine in any of them.
std::optional<FiberValues> solve_on_fiber(const ThirdOrderPDE& f, const JetPoint& m1,
                                          std::optional<Coordinate> distinguished,
                                          const FiberValues& probe);
JetPoint fiber_point(const JetPoint& m1, const FiberValues& v);

struct ConeSample {
  JetPoint base = JetPoint::zero(1);
  std::optional<Coordinate> distinguished;
  std::vector<JetPoint> points;
  std::vector<std::vector<CharLine>> lines;  // per point
  std::optional<Distribution> linear_component;
  std::vector<Distribution> linear_components;
  std::vector<std::string> notes;
};

ConeSample cone_sample(const ThirdOrderPDE& f, const JetPoint& m1,
                       const std::vector<FiberValues>& samples);
ConeSample cone_sample(const ThirdOrderPDE& f, const JetPoint& m1, std::uint64_t seed);

}  // namespace mae
