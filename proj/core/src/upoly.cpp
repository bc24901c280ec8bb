#include "mae/upoly.hpp"

#include <optional>
#include <sstream>

#include "mae/errors.hpp"

namespace mae {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<std::size_t>(i)];
}

Rational UPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

long double UPoly::eval_approx(long double x) const {
  long double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + static_cast<long double>(it->get_d());
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r = *this;
  const Rational l = lead();
  for (auto& x : r.c_) x /= l;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> r = a.c_;
  for (auto& x : r) x *= s;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  UPoly r = *this;
  if (r.degree() < d.degree()) return {UPoly(), r};
  std::vector<Rational> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Rational f = r.lead() / d.lead();
    q[static_cast<std::size_t>(shift)] = f;
    std::vector<Rational> t(static_cast<std::size_t>(shift), Rational(0));
    for (const auto& x : d.c_) t.push_back(x * f);
    r -= UPoly(std::move(t));
  }
  return {UPoly(std::move(q)), r};
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1) os << mae::to_string(mag) << (i > 0 ? "*" : "");
    if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return chain;
}

int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sign(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

// Isolating intervals (lo, hi] of the real roots of a squarefree p.
void isolate(const std::vector<UPoly>& chain, const Rational& lo, const Rational& hi,
             std::vector<std::pair<Rational, Rational>>& out) {
  const int n = sign_changes(chain, lo) - sign_changes(chain, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate(chain, lo, mid, out);
  isolate(chain, mid, hi, out);
}

// Shrinks (lo, hi] around the single root of p until hi - lo < width.
void refine(const UPoly& p, Rational& lo, Rational& hi, const Rational& width) {
  if (p.eval(hi) == 0) {
    lo = hi;
    return;
  }
  const int s_hi = sign(p.eval(hi));
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    const int s = sign(p.eval(mid));
    if (s == 0) {
      lo = hi = mid;
      return;
    }
    if (s == s_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

Integer integer_lead(const UPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Rational lead = p.lead() * Rational(l);
  return abs(lead.get_num());
}

}  // namespace

RootDecomposition decompose_roots(const UPoly& input) {
  if (input.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  RootDecomposition out;
  UPoly p = input;
  if (p.degree() <= 0) {
    out.remainder = p;
    return out;
  }
  const UPoly squarefree = p.divmod(gcd(p, p.derivative())).first;
  const auto chain = sturm_chain(squarefree);
  const Rational bound = cauchy_bound(squarefree);
  std::vector<std::pair<Rational, Rational>> intervals;
  isolate(chain, -bound, bound, intervals);

  // Every rational root of an integer polynomial with leading coefficient N is k/N.
  const Integer lead_int = integer_lead(squarefree);
  Rational grid(Integer(1), lead_int);
  grid.canonicalize();
  std::vector<std::pair<Rational, Rational>> irrational_intervals;
  for (auto [lo, hi] : intervals) {
    refine(squarefree, lo, hi, grid / 2);
    std::optional<Rational> found;
    if (lo == hi) {
      found = lo;
    } else {
      Rational scaled_lo = lo * Rational(lead_int);
      Rational scaled_hi = hi * Rational(lead_int);
      Integer k_lo;
      Integer k_hi;
      mpz_cdiv_q(k_lo.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
      mpz_fdiv_q(k_hi.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
      for (Integer k = k_lo; k <= k_hi; ++k) {
        Rational cand(k, lead_int);
        cand.canonicalize();
        if (cand > lo && squarefree.eval(cand) == 0) {
          found = cand;
          break;
        }
      }
    }
    if (found) {
      RationalRoot r{*found, 0};
      const UPoly lin({-*found, Rational(1)});
      while (true) {
        auto [q, rem] = p.divmod(lin);
        if (!rem.is_zero()) break;
        p = q;
        ++r.multiplicity;
      }
      out.rational.push_back(r);
    } else {
      irrational_intervals.emplace_back(lo, hi);
    }
  }
  out.remainder = p;
  if (!irrational_intervals.empty()) {
    // Without rational roots, a remainder of degree <= 3 is irreducible up to repeated factors.
    const UPoly minpoly = p.divmod(gcd(p, p.derivative())).first.monic();
    if (minpoly.degree() > 3) {
      throw Error(ErrorCode::InvalidArgument, "irrational roots supported only up to degree 3");
    }
    for (auto [lo, hi] : irrational_intervals) {
      RealAlgebraicRoot r;
      r.minpoly = minpoly;
      Rational a = lo;
      Rational b = hi;
      refine(minpoly, a, b, Rational(1, 1000000000) / 1000000000);
      r.lo = a;
      r.hi = b;
      r.approx = Rational((a + b) / 2).get_d();
      out.irrational.push_back(r);
    }
  }
  return out;
}

}  // namespace mae
