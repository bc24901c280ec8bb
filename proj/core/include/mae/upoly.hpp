#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mae/rational.hpp"

namespace mae {

// Dense univariate polynomial over Q, coefficients in ascending degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  long double eval_approx(long double x) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);

struct RationalRoot {
  Rational value;
  int multiplicity = 1;
};

struct RealAlgebraicRoot {
  UPoly minpoly;  // irreducible over Q, degree >= 2
  Rational lo, hi;  // isolating interval, lo < root < hi
  double approx = 0.0;
};

struct RootDecomposition {
  std::vector<RationalRoot> rational;        // ascending
  UPoly remainder;                            // no rational roots, squarefree factors kept with multiplicity
  std::vector<RealAlgebraicRoot> irrational;  // real roots of the remainder, ascending
};

// Exact rational roots plus isolated irrational real roots. Irrational roots are
// only reported with an irreducible minimal polynomial when the remainder has
// degree at most 3, which covers every symbol cubic.
RootDecomposition decompose_roots(const UPoly& p);

}  // namespace mae
