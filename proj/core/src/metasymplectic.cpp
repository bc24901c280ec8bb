#include "mae/metasymplectic.hpp"

#include "mae/errors.hpp"
#include "mae/sampling.hpp"

namespace mae {

bool same_line(const LDualElement& x, const LDualElement& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return (x.c1 * y.c2 - x.c2 * y.c1).is_zero();
}

LDualElement omega_bilinear(const VectorField& x, const VectorField& y) {
  const auto& [a1, a2, A11, A12, A22] = x.frame();
  const auto& [b1, b2, B11, B12, B22] = y.frame();
  return {(a1 * B11 - b1 * A11) + (a2 * B12 - b2 * A12),
          (a1 * B12 - b1 * A12) + (a2 * B22 - b2 * A22)};
}

MultiPoly omega_trilinear(const VectorField& x1, const VectorField& x2, const VectorField& x3) {
  const LDualElement w = omega_bilinear(x1, x2);
  const auto& f = x3.frame();
  return w.c1 * f[0] + w.c2 * f[1];
}

bool is_threefold_orthogonal(const Distribution& d1, const Distribution& d2, const Distribution& d3) {
  constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& x : d1.generators()) {
    for (const auto& y : d2.generators()) {
      for (const auto& z : d3.generators()) {
        const std::array<const VectorField*, 3> v{&x, &y, &z};
        for (const auto& p : perms) {
          if (!omega_trilinear(*v[p[0]], *v[p[1]], *v[p[2]]).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Scales a projective pair by a constant so that it prints canonically.
LDualElement normalize_line(MultiPoly l, MultiPoly m) {
  const MultiPoly& pivot = !m.is_zero() ? m : l;
  if (pivot.is_constant()) {
    const Rational s = 1 / pivot.constant_value();
    l *= s;
    m *= s;
  } else if (!m.is_zero()) {
    if (auto q = l.divide_exact(m)) return {*q, 1};
  }
  return {l, m};
}

}  // namespace

std::pair<LDualElement, LDualElement> characteristic_lines_of_covector(const VerticalCovector& w) {
  if (w.a.is_zero() && w.b.is_zero() && w.c.is_zero()) {
    throw Error(ErrorCode::NotDecomposable, "zero covector");
  }
  if (w.a.is_zero()) {
    // m (B l + C m) = 0
    LDualElement inf{1, 0};
    if (w.b.is_zero()) return {inf, inf};
    return {inf, normalize_line(-w.c, w.b)};
  }
  const MultiPoly disc = w.b * w.b - w.a * w.c * Rational(4);
  if (disc.is_constant() && disc.constant_value() < 0) {
    throw Error(ErrorCode::NotDecomposable, "complex characteristic lines");
  }
  auto root = disc.sqrt();
  if (!root) throw Error(ErrorCode::NotDecomposable, "discriminant " + disc.to_string() + " is not a square");
  const MultiPoly two_a = w.a * Rational(2);
  return {normalize_line(-w.b + *root, two_a), normalize_line(-w.b - *root, two_a)};
}

HorizontalSplit split_horizontal(const Distribution& d) {
  if (d.generic_rank() != 3) throw Error(ErrorCode::RankError, "expected a rank-3 distribution");
  const Distribution basis = d.basis();
  const Distribution v = vertical_part(d);
  if (v.generic_rank() == 3) throw Error(ErrorCode::DegenerateHorizontal, "distribution is vertical");
  if (v.generic_rank() == 1) {
    throw Error(ErrorCode::NormalFormError, "two horizontal directions, not a single line");
  }
  HorizontalSplit out;
  const Point& probe = generic_sample_points()[basis.generic_sample()];
  bool found = false;
  for (const auto& g : basis.generators()) {
    const auto& f = g.frame();
    if (f[0].eval(probe) != 0 || f[1].eval(probe) != 0) {
      out.horizontal = f;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::DegenerateHorizontal, "no horizontal generator");
  for (const auto& g : v.generators()) out.vertical.push_back(g.frame());
  return out;
}

VerticalCovector annihilating_covector(const FrameComponents& x, const FrameComponents& y) {
  const MultiPoly &R1 = x[2], &S1 = x[3], &T1 = x[4];
  const MultiPoly &R2 = y[2], &S2 = y[3], &T2 = y[4];
  return {S1 * T2 - S2 * T1, -(R1 * T2 - R2 * T1), R1 * S2 - R2 * S1};
}

namespace {

// Two independent vectors of the kernel of P v11 + Q v12 + R v22.
std::vector<FrameComponents> vertical_kernel(const MultiPoly& P, const MultiPoly& Q, const MultiPoly& R) {
  const std::array<FrameComponents, 3> cands{
      FrameComponents{0, 0, Q, -P, 0}, FrameComponents{0, 0, R, 0, -P},
      FrameComponents{0, 0, 0, R, -Q}};
  std::vector<VectorField> fields;
  for (const auto& c : cands) fields.push_back(VectorField::frame(c));
  const Distribution all(fields);
  std::vector<FrameComponents> out;
  const Distribution basis = all.basis();
  for (const auto& g : basis.generators()) out.push_back(g.frame());
  return out;
}

}  // namespace

std::pair<Distribution, Distribution> orthogonal_complement_pair(const Distribution& d1) {
  const HorizontalSplit split = split_horizontal(d1);
  const MultiPoly& a = split.horizontal[0];
  const MultiPoly& b = split.horizontal[1];
  const VerticalCovector w = annihilating_covector(split.vertical[0], split.vertical[1]);
  const auto lines = characteristic_lines_of_covector(w);
  const std::array<LDualElement, 2> h{lines.first, lines.second};

  // Fibre translation by a symmetric cubic carrying the homogeneous model onto D1.
  const MultiPoly rho = w.apply(split.horizontal[2], split.horizontal[3], split.horizontal[4]);
  std::array<MultiPoly, 4> sigma{0, 0, 0, 0};
  MultiPoly den = 1;
  if (!rho.is_zero()) {
    const std::array<MultiPoly, 4> pairing{w.a * a, w.a * b + w.b * a, w.b * b + w.c * a, w.c * b};
    std::size_t k = 0;
    while (k < 4 && pairing[k].is_zero()) ++k;
    if (k == 4) throw Error(ErrorCode::DegenerateHorizontal, "horizontal direction pairs to zero");
    sigma[k] = rho;
    den = pairing[k];
  }

  auto build = [&](std::size_t i) {
    const LDualElement& hi = h[i];
    const LDualElement& hj = h[1 - i];
    const MultiPoly alpha = hj.c2;
    const MultiPoly beta = -hj.c1;
    const MultiPoly P = hi.c2 * a;
    const MultiPoly Q = hi.c2 * b - hi.c1 * a;
    const MultiPoly R = -(hi.c1 * b);
    std::vector<VectorField> gens;
    // alpha*sigma_(1jk) + beta*sigma_(2jk) for sigma = (s111, s112, s122, s222).
    gens.push_back(VectorField::frame(den * alpha, den * beta, alpha * sigma[0] + beta * sigma[1],
                                      alpha * sigma[1] + beta * sigma[2],
                                      alpha * sigma[2] + beta * sigma[3]));
    for (const auto& v : vertical_kernel(P, Q, R)) gens.push_back(VectorField::frame(v));
    return Distribution(std::move(gens));
  };
  return {build(0), build(1)};
}

}  // namespace mae
