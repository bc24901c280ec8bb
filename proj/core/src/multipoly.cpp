#include "mae/multipoly.hpp"

#include <sstream>

#include "mae/errors.hpp"

namespace mae {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumCoordinates; ++i) {
    const int e = exps[i] + o.exps[i];
    if (e > 255) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
    r.exps[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  return exps <=> o.exps;
}

Monomial Monomial::of(Coordinate c, int power) {
  Monomial m;
  m.exps[index(c)] = static_cast<std::uint8_t>(power);
  return m;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(Coordinate c) { return term(Monomial::of(c), 1); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_value() const { return coefficient(Monomial{}); }

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int MultiPoly::degree_in(Coordinate c) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.exponent(c));
  return d;
}

int MultiPoly::max_level() const {
  int lvl = -1;
  for (const auto& [m, _] : terms_) {
    for (auto c : kAllCoordinates) {
      if (m.exponent(c) > 0) lvl = std::max(lvl, level(c));
    }
  }
  return lvl;
}

std::pair<Monomial, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) return {Monomial{}, Rational(0)};
  return *terms_.rbegin();
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(Coordinate c) const {
  MultiPoly r;
  const auto i = index(c);
  for (const auto& [m, coef] : terms_) {
    if (m.exps[i] == 0) continue;
    Monomial dm = m;
    dm.exps[i] -= 1;
    r.add_term(dm, coef * m.exps[i]);
  }
  return r;
}

namespace {
Rational power_of(const Rational& x, int e) {
  Rational r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}
}  // namespace

Rational MultiPoly::eval(const Point& p) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kNumCoordinates && t != 0; ++i) {
      if (m.exps[i] > 0) t *= power_of(p[i], m.exps[i]);
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::partial_eval(const std::array<bool, kNumCoordinates>& mask,
                                  const Point& values) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Rational t = c;
    for (std::size_t i = 0; i < kNumCoordinates; ++i) {
      if (mask[i] && m.exps[i] > 0) {
        t *= power_of(values[i], m.exps[i]);
        rest.exps[i] = 0;
      }
    }
    r.add_term(rest, t);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Coordinate c, const MultiPoly& replacement) const {
  MultiPoly r;
  const auto i = index(c);
  std::vector<MultiPoly> powers{MultiPoly(1)};
  for (const auto& [m, coef] : terms_) {
    Monomial rest = m;
    const int e = m.exps[i];
    rest.exps[i] = 0;
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * replacement);
    r += term(rest, coef) * powers[static_cast<std::size_t>(e)];
  }
  return r;
}

std::map<Monomial, MultiPoly> MultiPoly::coefficients_in(const std::vector<Coordinate>& vars) const {
  std::map<Monomial, MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    Monomial key;
    Monomial rest = m;
    for (auto v : vars) {
      key.exps[index(v)] = m.exps[index(v)];
      rest.exps[index(v)] = 0;
    }
    out[key].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.rbegin()->second < 0) scale = -scale;
  return *this * scale;
}

namespace {
bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kNumCoordinates; ++i) {
    if (d.exps[i] > m.exps[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial q;
  for (std::size_t i = 0; i < kNumCoordinates; ++i) {
    q.exps[i] = static_cast<std::uint8_t>(m.exps[i] - d.exps[i]);
  }
  return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer n;
  Integer d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}
}  // namespace

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const auto [dm, dc] = d.leading_term();
  MultiPoly q;
  MultiPoly r = *this;
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading_term();
    if (!divides(dm, rm)) return std::nullopt;
    MultiPoly t = term(quotient(rm, dm), rc / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

std::optional<MultiPoly> MultiPoly::sqrt() const {
  if (is_zero()) return MultiPoly();
  const auto [lm, lc] = leading_term();
  Monomial half;
  for (std::size_t i = 0; i < kNumCoordinates; ++i) {
    if (lm.exps[i] % 2 != 0) return std::nullopt;
    half.exps[i] = static_cast<std::uint8_t>(lm.exps[i] / 2);
  }
  auto root = rational_sqrt(lc);
  if (!root) return std::nullopt;
  MultiPoly s = term(half, *root);
  const Rational twice_lead = 2 * *root;
  for (std::size_t guard = 0; guard <= terms_.size() + 1; ++guard) {
    MultiPoly rem = *this - s * s;
    if (rem.is_zero()) return s;
    const auto [rm, rc] = rem.leading_term();
    if (!divides(half, rm)) return std::nullopt;
    const Monomial tm = quotient(rm, half);
    if (!(tm < half)) return std::nullopt;
    s += term(tm, rc / twice_lead);
  }
  return std::nullopt;
}

namespace {
std::string monomial_string(const Monomial& m) {
  std::string out;
  for (auto c : kAllCoordinates) {
    const int e = m.exponent(c);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name(c);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}
}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mae::to_string(mag);
    } else if (mag == 1) {
      os << monomial_string(m);
    } else {
      os << mae::to_string(mag) << '*' << monomial_string(m);
    }
  }
  return os.str();
}

std::string to_string(const MultiPoly& p) { return p.to_string(); }

MultiPoly poly_derivative(const MultiPoly& p, Coordinate v) { return p.derivative(v); }

}  // namespace mae
