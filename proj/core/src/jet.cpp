#include "mae/jet.hpp"

#include "mae/errors.hpp"
#include "mae/sampling.hpp"

namespace mae {

namespace {
MultiPoly var(Coordinate c) { return MultiPoly::var(c); }
}  // namespace

std::size_t JetPoint::coordinate_count(int level) {
  switch (level) {
    case 0: return 5;
    case 1: return 8;
    case 2: return 12;
    default: throw Error(ErrorCode::InvalidArgument, "jet level must be 0, 1 or 2");
  }
}

JetPoint::JetPoint(int level, const std::map<Coordinate, Rational>& values) : level_(level) {
  const std::size_t n = coordinate_count(level);
  if (values.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "jet point of level " + std::to_string(level) +
                                                " needs exactly " + std::to_string(n) + " coordinates");
  }
  for (const auto& [c, v] : values) {
    if (index(c) >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "coordinate " + std::string(name(c)) + " above level " + std::to_string(level));
    }
    values_[index(c)] = v;
  }
}

JetPoint JetPoint::zero(int level) {
  coordinate_count(level);
  JetPoint p;
  p.level_ = level;
  return p;
}

JetPoint JetPoint::from_point(int level, const Point& p) {
  const std::size_t n = coordinate_count(level);
  JetPoint out;
  out.level_ = level;
  for (std::size_t i = 0; i < n; ++i) out.values_[i] = p[i];
  return out;
}

const Rational& JetPoint::operator[](Coordinate c) const {
  if (index(c) >= coordinate_count(level_)) {
    throw Error(ErrorCode::InvalidArgument, "coordinate " + std::string(name(c)) + " not set");
  }
  return values_[index(c)];
}

JetPoint JetPoint::project(int level) const {
  if (level > level_) throw Error(ErrorCode::InvalidArgument, "cannot project to a higher level");
  return from_point(level, values_);
}

JetPoint JetPoint::with(Coordinate c, const Rational& v) const {
  JetPoint out = *this;
  if (index(c) >= coordinate_count(level_)) {
    throw Error(ErrorCode::InvalidArgument, "coordinate " + std::string(name(c)) + " above level");
  }
  out.values_[index(c)] = v;
  return out;
}

Rational eval_at(const MultiPoly& p, const JetPoint& point) {
  const std::size_t n = JetPoint::coordinate_count(point.level());
  for (auto c : kAllCoordinates) {
    if (index(c) >= n && p.uses(c)) {
      throw Error(ErrorCode::InvalidArgument,
                  "polynomial uses " + std::string(name(c)) + " beyond the point's level");
    }
  }
  return p.eval(point.full());
}

VectorField VectorField::frame(const FrameComponents& c) {
  VectorField v;
  const auto& [h1, h2, v11, v12, v22] = c;
  v.full_[index(Coordinate::x1)] = h1;
  v.full_[index(Coordinate::x2)] = h2;
  v.full_[index(Coordinate::u)] = var(Coordinate::p1) * h1 + var(Coordinate::p2) * h2;
  v.full_[index(Coordinate::p1)] = var(Coordinate::p11) * h1 + var(Coordinate::p12) * h2;
  v.full_[index(Coordinate::p2)] = var(Coordinate::p12) * h1 + var(Coordinate::p22) * h2;
  v.full_[index(Coordinate::p11)] = v11;
  v.full_[index(Coordinate::p12)] = v12;
  v.full_[index(Coordinate::p22)] = v22;
  v.frame_ = c;
  return v;
}

VectorField VectorField::frame(MultiPoly h1, MultiPoly h2, MultiPoly v11, MultiPoly v12,
                               MultiPoly v22) {
  return frame(FrameComponents{std::move(h1), std::move(h2), std::move(v11), std::move(v12),
                               std::move(v22)});
}

VectorField VectorField::full(const FullComponents& c) {
  VectorField v;
  v.full_ = c;
  v.classify();
  return v;
}

VectorField VectorField::coordinate(Coordinate c) {
  if (level(c) == 2) throw Error(ErrorCode::InvalidArgument, "no vector field along p_ijk on M^(1)");
  FullComponents comps{};
  comps[index(c)] = MultiPoly(1);
  return full(comps);
}

void VectorField::classify() {
  const MultiPoly& h1 = full_[index(Coordinate::x1)];
  const MultiPoly& h2 = full_[index(Coordinate::x2)];
  const bool contact =
      full_[index(Coordinate::u)] == var(Coordinate::p1) * h1 + var(Coordinate::p2) * h2 &&
      full_[index(Coordinate::p1)] == var(Coordinate::p11) * h1 + var(Coordinate::p12) * h2 &&
      full_[index(Coordinate::p2)] == var(Coordinate::p12) * h1 + var(Coordinate::p22) * h2;
  if (contact) {
    frame_ = FrameComponents{h1, h2, full_[index(Coordinate::p11)], full_[index(Coordinate::p12)],
                             full_[index(Coordinate::p22)]};
  } else {
    frame_.reset();
  }
}

const FrameComponents& VectorField::frame() const {
  if (!frame_) throw Error(ErrorCode::OutsideC1, "vector field is not a section of C^1");
  return *frame_;
}

bool VectorField::is_zero() const {
  for (const auto& c : full_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool VectorField::is_vertical() const {
  const auto& f = frame();
  return f[0].is_zero() && f[1].is_zero();
}

MultiPoly VectorField::apply(const MultiPoly& f) const {
  MultiPoly out;
  for (std::size_t j = 0; j < kNumLevel1; ++j) {
    if (full_[j].is_zero()) continue;
    out += full_[j] * f.derivative(kAllCoordinates[j]);
  }
  return out;
}

RationalVector VectorField::eval_full(const Point& p) const {
  RationalVector v;
  v.reserve(kNumLevel1);
  for (const auto& c : full_) v.push_back(c.eval(p));
  return v;
}

RationalVector VectorField::eval_frame(const Point& p) const {
  RationalVector v;
  v.reserve(5);
  for (const auto& c : frame()) v.push_back(c.eval(p));
  return v;
}

VectorField VectorField::operator+(const VectorField& o) const {
  FullComponents c;
  for (std::size_t i = 0; i < kNumLevel1; ++i) c[i] = full_[i] + o.full_[i];
  return full(c);
}

VectorField VectorField::operator-(const VectorField& o) const {
  FullComponents c;
  for (std::size_t i = 0; i < kNumLevel1; ++i) c[i] = full_[i] - o.full_[i];
  return full(c);
}

VectorField VectorField::operator*(const MultiPoly& f) const {
  FullComponents c;
  for (std::size_t i = 0; i < kNumLevel1; ++i) c[i] = full_[i] * f;
  return full(c);
}

VectorField total_derivative(int i) {
  if (i != 1 && i != 2) throw Error(ErrorCode::InvalidArgument, "total derivative index must be 1 or 2");
  return VectorField::frame(i == 1 ? 1 : 0, i == 2 ? 1 : 0, 0, 0, 0);
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  FullComponents out;
  const auto& xc = x.full();
  const auto& yc = y.full();
  for (std::size_t k = 0; k < kNumLevel1; ++k) {
    out[k] = x.apply(yc[k]) - y.apply(xc[k]);
  }
  return VectorField::full(out);
}

Distribution::Distribution(std::vector<VectorField> generators) : generators_(std::move(generators)) {
  const auto& samples = generic_sample_points();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::size_t r = rank_at(samples[i]);
    if (r > generic_rank_) {
      generic_rank_ = r;
      generic_sample_ = i;
    }
  }
}

Distribution Distribution::from_frame_rows(const std::vector<RationalVector>& rows) {
  std::vector<VectorField> gens;
  for (const auto& r : rows) {
    if (r.size() != 5) throw Error(ErrorCode::InvalidArgument, "frame rows need 5 entries");
    gens.push_back(VectorField::frame(r[0], r[1], r[2], r[3], r[4]));
  }
  return Distribution(std::move(gens));
}

bool Distribution::in_c1() const {
  for (const auto& g : generators_) {
    if (!g.in_c1()) return false;
  }
  return true;
}

RationalMatrix Distribution::full_matrix_at(const Point& p) const {
  RationalMatrix m(generators_.size(), kNumLevel1);
  for (std::size_t r = 0; r < generators_.size(); ++r) {
    const auto v = generators_[r].eval_full(p);
    for (std::size_t c = 0; c < kNumLevel1; ++c) m(r, c) = v[c];
  }
  return m;
}

RationalMatrix Distribution::frame_matrix_at(const Point& p) const {
  RationalMatrix m(generators_.size(), 5);
  for (std::size_t r = 0; r < generators_.size(); ++r) {
    const auto v = generators_[r].eval_frame(p);
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = v[c];
  }
  return m;
}

Distribution Distribution::basis() const {
  const Point& p = generic_sample_points()[generic_sample_];
  std::vector<VectorField> chosen;
  std::vector<RationalVector> rows;
  for (const auto& g : generators_) {
    if (chosen.size() == generic_rank_) break;
    rows.push_back(g.eval_full(p));
    if (mae::rank(RationalMatrix::from_rows(rows, kNumLevel1)) == rows.size()) {
      chosen.push_back(g);
    } else {
      rows.pop_back();
    }
  }
  return Distribution(std::move(chosen));
}

namespace {
std::vector<Point> check_points(const std::vector<Point>& extra) {
  std::vector<Point> pts = generic_sample_points();
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

RationalMatrix stacked(const Distribution& a, const Distribution& b, const Point& p) {
  std::vector<RationalVector> rows;
  for (const auto& g : a.generators()) rows.push_back(g.eval_full(p));
  for (const auto& g : b.generators()) rows.push_back(g.eval_full(p));
  return RationalMatrix::from_rows(rows, kNumLevel1);
}
}  // namespace

bool contained_in(const Distribution& a, const Distribution& b, const std::vector<Point>& extra) {
  for (const auto& p : check_points(extra)) {
    if (mae::rank(stacked(a, b, p)) != b.rank_at(p)) return false;
  }
  return true;
}

bool same_span(const Distribution& a, const Distribution& b, const std::vector<Point>& extra) {
  for (const auto& p : check_points(extra)) {
    const auto ra = a.rank_at(p);
    if (ra != b.rank_at(p) || mae::rank(stacked(a, b, p)) != ra) return false;
  }
  return true;
}

namespace {
// Pairs (all generators of the k-th derived distribution, a generic basis of it).
std::vector<std::pair<Distribution, Distribution>> chain_with_bases(const Distribution& d,
                                                                    std::size_t steps) {
  std::vector<std::pair<Distribution, Distribution>> out;
  out.emplace_back(d, d.basis());
  for (std::size_t s = 0; s < steps; ++s) {
    const auto& base = out.back().second.generators();
    std::vector<VectorField> gens = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        VectorField b = lie_bracket(base[i], base[j]);
        if (!b.is_zero()) gens.push_back(std::move(b));
      }
    }
    Distribution next(std::move(gens));
    Distribution next_basis = next.basis();
    out.emplace_back(std::move(next), std::move(next_basis));
  }
  return out;
}
}  // namespace

std::vector<Distribution> derived_chain(const Distribution& d, std::size_t steps) {
  std::vector<Distribution> out;
  for (auto& [full, basis] : chain_with_bases(d, steps)) out.push_back(basis);
  return out;
}

std::vector<std::size_t> derived_flag(const Distribution& d, std::size_t max_steps) {
  std::vector<std::size_t> ranks{d.generic_rank()};
  Distribution current = d.basis();
  for (std::size_t s = 0; s < max_steps; ++s) {
    const auto& base = current.generators();
    std::vector<VectorField> gens = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        VectorField b = lie_bracket(base[i], base[j]);
        if (!b.is_zero()) gens.push_back(std::move(b));
      }
    }
    Distribution next(std::move(gens));
    ranks.push_back(next.generic_rank());
    if (ranks.back() == ranks[ranks.size() - 2]) break;
    current = next.basis();
  }
  return ranks;
}

std::vector<std::size_t> derived_flag_at(const Distribution& d, const Point& probe,
                                         std::size_t steps) {
  std::vector<std::size_t> ranks;
  for (const auto& [full, basis] : chain_with_bases(d, steps)) ranks.push_back(full.rank_at(probe));
  return ranks;
}

Distribution vertical_part(const Distribution& d) {
  if (!d.in_c1()) throw Error(ErrorCode::OutsideC1, "vertical part needs generators in C^1");
  const Distribution basis = d.basis();
  const auto& gens = basis.generators();
  const auto& samples = generic_sample_points();

  auto h = [&](std::size_t i, int k) -> const MultiPoly& { return gens[i].frame()[static_cast<std::size_t>(k)]; };
  auto hrank_at = [&](const Point& p) {
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < gens.size(); ++i) rows.push_back({h(i, 0).eval(p), h(i, 1).eval(p)});
    return rows.empty() ? std::size_t{0} : mae::rank(RationalMatrix::from_rows(rows, 2));
  };

  std::size_t hrank = 0;
  std::size_t hsample = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto r = hrank_at(samples[i]);
    if (r > hrank) {
      hrank = r;
      hsample = i;
    }
  }
  const Point& probe = samples[hsample];
  for (const auto& p : samples) {
    if (basis.rank_at(p) - hrank_at(p) != basis.generic_rank() - hrank) {
      throw Error(ErrorCode::NonConstantRank, "vertical intersection rank varies across samples");
    }
  }

  std::vector<VectorField> vertical;
  if (hrank == 0) {
    vertical = gens;
  } else if (hrank == 1) {
    std::size_t a = 0;
    int comp = 0;
    for (; a < gens.size(); ++a) {
      if (h(a, 0).eval(probe) != 0) { comp = 0; break; }
      if (h(a, 1).eval(probe) != 0) { comp = 1; break; }
    }
    const MultiPoly& alpha = h(a, comp);
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (b == a) continue;
      vertical.push_back(gens[b] * alpha - gens[a] * h(b, comp));
    }
  } else {
    std::size_t a = 0;
    std::size_t b = 1;
    bool found = false;
    for (a = 0; a < gens.size() && !found; ++a) {
      for (b = a + 1; b < gens.size(); ++b) {
        if ((h(a, 0) * h(b, 1) - h(a, 1) * h(b, 0)).eval(probe) != 0) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    auto det = [&](std::size_t i, std::size_t j) { return h(i, 0) * h(j, 1) - h(i, 1) * h(j, 0); };
    const MultiPoly delta = det(a, b);
    for (std::size_t c = 0; c < gens.size(); ++c) {
      if (c == a || c == b) continue;
      vertical.push_back(gens[c] * delta - gens[a] * det(c, b) - gens[b] * det(a, c));
    }
  }
  std::vector<VectorField> nonzero;
  for (auto& v : vertical) {
    if (!v.in_c1() || !v.is_vertical()) {
      throw Error(ErrorCode::NonConstantRank, "elimination of horizontal components failed");
    }
    if (!v.is_zero()) nonzero.push_back(std::move(v));
  }
  return Distribution(std::move(nonzero)).basis();
}

LagrangianPlane::LagrangianPlane(const JetPoint& m2) : base_(m2.level() == 2 ? m2.project(1) : m2) {
  if (m2.level() != 2) throw Error(ErrorCode::InvalidArgument, "Lagrangian plane needs a level-2 point");
  for (std::size_t i = 0; i < 4; ++i) p3_[i] = m2[kThirdOrder[i]];
}

RationalVector LagrangianPlane::xi(int i) const {
  if (i == 1) return {1, 0, p3_[0], p3_[1], p3_[2]};
  if (i == 2) return {0, 1, p3_[1], p3_[2], p3_[3]};
  throw Error(ErrorCode::InvalidArgument, "xi index must be 1 or 2");
}

VectorField LagrangianPlane::xi_field(int i) const {
  const auto v = xi(i);
  return VectorField::frame(v[0], v[1], v[2], v[3], v[4]);
}

RationalMatrix LagrangianPlane::matrix() const { return RationalMatrix::from_rows({xi(1), xi(2)}, 5); }

LagrangianPlane lagrangian_plane(const JetPoint& m2) { return LagrangianPlane(m2); }

FrameComponents symbolic_xi(int i) {
  auto p = [](int a, int b, int c) { return MultiPoly::var(third(a, b, c)); };
  if (i == 1) return {1, 0, p(1, 1, 1), p(1, 1, 2), p(1, 2, 2)};
  if (i == 2) return {0, 1, p(1, 1, 2), p(1, 2, 2), p(2, 2, 2)};
  throw Error(ErrorCode::InvalidArgument, "xi index must be 1 or 2");
}

}  // namespace mae
