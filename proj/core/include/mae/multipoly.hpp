#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mae/coordinate.hpp"
#include "mae/rational.hpp"

namespace mae {

struct Monomial {
  std::array<std::uint8_t, kNumCoordinates> exps{};

  int degree() const;
  int exponent(Coordinate c) const { return exps[index(c)]; }
  bool is_one() const { return degree() == 0; }
  Monomial operator*(const Monomial& o) const;
  // Graded lexicographic over the Coordinate enumeration order.
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;

  static Monomial of(Coordinate c, int power = 1);
};

using Point = std::array<Rational, kNumCoordinates>;

class MultiPoly {
 public:
  // Ascending graded-lex order; the leading term is the last entry.
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Coordinate c);
  static MultiPoly term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of 1
  int degree() const;               // -1 for zero
  int degree_in(Coordinate c) const;
  bool uses(Coordinate c) const { return degree_in(c) > 0; }
  // Highest jet level among used coordinates, -1 for constants.
  int max_level() const;
  std::pair<Monomial, Rational> leading_term() const;
  Rational coefficient(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly pow(unsigned n) const;
  MultiPoly derivative(Coordinate c) const;
  Rational eval(const Point& p) const;
  // Replaces each coordinate flagged in `mask` by the matching entry of `values`.
  MultiPoly partial_eval(const std::array<bool, kNumCoordinates>& mask, const Point& values) const;
  MultiPoly substitute(Coordinate c, const MultiPoly& replacement) const;

  // Splits into coefficients of monomials in `vars`; coefficients avoid `vars`.
  std::map<Monomial, MultiPoly> coefficients_in(const std::vector<Coordinate>& vars) const;

  // Divides by the rational content and makes the leading coefficient positive.
  MultiPoly primitive() const;
  // Square root when the polynomial is a perfect square, with positive leading coefficient.
  std::optional<MultiPoly> sqrt() const;
  // Exact quotient when `d` divides this polynomial.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

std::string to_string(const MultiPoly& p);
MultiPoly poly_derivative(const MultiPoly& p, Coordinate v);

}  // namespace mae
