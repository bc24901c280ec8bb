#include "mae/integrals.hpp"

#include <algorithm>
#include <map>

#include "mae/errors.hpp"
#include "mae/linalg.hpp"

namespace mae {

bool is_first_integral(const MultiPoly& f, const Distribution& d) {
  for (const auto& g : d.generators()) {
    if (!g.apply(f).is_zero()) return false;
  }
  return true;
}

const char* verdict_name(IntegralVerdict v) {
  switch (v) {
    case IntegralVerdict::Yes: return "yes";
    case IntegralVerdict::YesVacuous: return "vacuous";
    case IntegralVerdict::No: return "no";
  }
  return "?";
}

namespace {

std::vector<JetPoint> integral_probes(const ProbeOptions& opts, std::size_t count) {
  std::vector<JetPoint> out;
  const auto fixed = probe_bases(opts.base);
  for (std::size_t i = 0; i < fixed.size() && out.size() < std::min<std::size_t>(2, count); ++i) {
    out.push_back(fixed[i]);
  }
  Sampler s(opts.seed);
  while (out.size() < count) out.push_back(JetPoint::from_point(1, s.point()).project(1));
  return out;
}

std::string point_string(const Point& p, std::size_t from, std::size_t to) {
  std::string out = "(";
  for (std::size_t i = from; i < to; ++i) out += to_string(p[i]) + (i + 1 < to ? ", " : ")");
  return out;
}

// Affine coefficients of a polynomial of degree <= 1 in p111..p222: four slopes then the constant.
RationalVector affine_row(const MultiPoly& g) {
  RationalVector row(5);
  for (const auto& [m, c] : g.terms()) {
    if (m.is_one()) {
      row[4] = c;
      continue;
    }
    bool found = false;
    for (std::size_t k = 0; k < 4; ++k) {
      if (m == Monomial::of(kThirdOrder[k])) {
        row[k] = c;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "df(xi) is not affine in the third derivatives");
  }
  return row;
}

}  // namespace

IntermediateCheck is_intermediate_integral(const MultiPoly& f, const MultiPoly& F, const ProbeOptions& opts,
                                           std::size_t probes) {
  if (f.max_level() > 1) throw Error(ErrorCode::InvalidArgument, "candidate must live on M^(1)");
  IntermediateCheck out;
  const std::array<MultiPoly, 2> dfxi{VectorField::frame(symbolic_xi(1)).apply(f),
                                      VectorField::frame(symbolic_xi(2)).apply(f)};
  for (const JetPoint& base : integral_probes(opts, 4 * probes)) {
    if (out.probes == probes) break;
    // sum_k a_k p_k + b = 0 for both rows, i.e. [a | -b].
    std::vector<RationalVector> rows;
    for (const auto& g : dfxi) {
      RationalVector r = affine_row(restrict_to_fiber(g, base));
      r[4] = -r[4];
      rows.push_back(std::move(r));
    }
    // df vanishes on C^1 here, so the level set is singular at this point.
    if (std::all_of(rows.begin(), rows.end(), [](const RationalVector& r) {
          return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
        })) {
      ++out.singular;
      continue;
    }
    ++out.probes;    const RationalMatrix aug = rref(RationalMatrix::from_rows(rows, 5));
    std::array<std::optional<MultiPoly>, 4> solved;
    bool consistent = true;
    for (std::size_t r = 0; r < aug.rows(); ++r) {
      std::size_t pivot = 5;
      for (std::size_t c = 0; c < 5 && pivot == 5; ++c) {
        if (aug(r, c) != 0) pivot = c;
      }
      if (pivot == 5) continue;
      if (pivot == 4) {
        consistent = false;
        break;
      }
      MultiPoly value(aug(r, 4));
      for (std::size_t c = pivot + 1; c < 4; ++c) {
        if (aug(r, c) != 0) value -= aug(r, c) * MultiPoly::var(kThirdOrder[c]);
      }
      solved[pivot] = value;
    }
    if (!consistent) continue;
    ++out.nonempty;
    MultiPoly restricted = restrict_to_fiber(F, base);
    for (std::size_t k = 0; k < 4; ++k) {
      if (solved[k]) restricted = restricted.substitute(kThirdOrder[k], *solved[k]);
    }
    if (restricted.is_zero()) continue;
    out.verdict = IntegralVerdict::No;
    // A concrete plane in the family where F does not vanish; a grid of 5 values per free coordinate
    // suffices for degree <= 4 in each.
    const std::array<Rational, 5> grid{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
    for (std::size_t code = 0; code < 625 && !out.witness; ++code) {
      Point p = base.full();
      std::size_t rest = code;
      for (std::size_t k = 0; k < 4; ++k, rest /= 5) {
        p[index(kThirdOrder[k])] = solved[k] ? Rational(0) : grid[rest % 5];
      }
      for (std::size_t k = 0; k < 4; ++k) {
        if (solved[k]) p[index(kThirdOrder[k])] = solved[k]->eval(p);
      }
      const Rational value = F.eval(p);
      if (value != 0) {
        out.witness = "F = " + to_string(value) + " at x1..p22 = " + point_string(p, 0, kNumLevel1) +
                      ", p111..p222 = " + point_string(p, kNumLevel1, kNumCoordinates);
      }
    }
    return out;
  }
  out.verdict = out.nonempty == 0 ? IntegralVerdict::YesVacuous : IntegralVerdict::Yes;
  return out;
}

DistributionRoute intermediate_integrals_via_distributions(const MultiPoly& f, const MultiPoly& F,
                                                           const ProbeOptions& opts) {
  const GoursatDetection det = detect_goursat(F, opts);
  if (det.distributions.empty()) {
    throw Error(ErrorCode::NotGoursat, std::string("equation is ") + class_name(det.kind));
  }
  DistributionRoute out;
  for (std::size_t i = 0; i < det.distributions.size() && !out.via; ++i) {
    if (is_first_integral(f, det.distributions[i])) out.via = i;
  }
  out.integral = out.via.has_value();
  out.direct = is_intermediate_integral(f, F, opts).verdict;
  if (out.direct == IntegralVerdict::YesVacuous) {
    out.notes.push_back("direct check is vacuous: no plane annihilates df at the probes");
  } else {
    out.agrees = out.integral == (out.direct == IntegralVerdict::Yes);
  }
  return out;
}

namespace {

void level1_monomials(int max_degree, std::size_t from, Monomial current, int degree, std::vector<Monomial>& out) {
  if (degree > 0) out.push_back(current);
  if (degree == max_degree) return;
  for (std::size_t i = from; i < kNumLevel1; ++i) {
    level1_monomials(max_degree, i, current * Monomial::of(kAllCoordinates[i]), degree + 1, out);
  }
}

}  // namespace

std::vector<CandidateIntegral> search_first_integrals(const Distribution& d, int max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::InvalidArgument, "search degree must be at least 1");
  std::vector<Monomial> monomials;
  level1_monomials(max_degree, 0, Monomial{}, 0, monomials);
  std::sort(monomials.begin(), monomials.end());

  // One equation per (generator, monomial of X(f)).
  std::map<std::pair<std::size_t, Monomial>, RationalVector> equations;
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    const MultiPoly m = MultiPoly::term(monomials[j], Rational(1));
    for (std::size_t g = 0; g < d.generators().size(); ++g) {
      const MultiPoly image = d.generators()[g].apply(m);
      for (const auto& [mono, c] : image.terms()) {
        auto [it, fresh] = equations.try_emplace({g, mono}, RationalVector(monomials.size()));
        it->second[j] += c;
      }
    }
  }
  std::vector<RationalVector> basis;
  if (equations.empty()) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      RationalVector e(monomials.size());
      e[j] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    std::vector<RationalVector> rows;
    for (auto& [key, row] : equations) rows.push_back(std::move(row));
    basis = rank_kernel(RationalMatrix::from_rows(rows, monomials.size())).kernel_basis;
  }
  std::vector<CandidateIntegral> out;
  if (basis.empty()) return out;
  // Echelon form with the highest monomials eliminated first, so low-degree integrals come out clean.
  std::vector<RationalVector> reversed;
  for (const auto& v : basis) reversed.emplace_back(v.rbegin(), v.rend());
  const RationalMatrix echelon = rref(RationalMatrix::from_rows(reversed, monomials.size()));
  for (std::size_t r = 0; r < echelon.rows(); ++r) {
    MultiPoly f;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const Rational& c = echelon(r, monomials.size() - 1 - j);
      if (c != 0) f += MultiPoly::term(monomials[j], c);
    }
    if (!f.is_zero()) out.push_back({f.primitive(), Provenance::Search});
  }
  std::sort(out.begin(), out.end(), [](const CandidateIntegral& a, const CandidateIntegral& b) {
    const Monomial& ma = a.f.leading_term().first;
    const Monomial& mb = b.f.leading_term().first;
    if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
    return mb < ma;
  });
  return out;
}

FlagVerdict derived_flag_criterion(const Distribution& d) {
  FlagVerdict out;
  out.flag = derived_flag(d);
  for (std::size_t i = 0; i < out.flag.size(); ++i) {
    if (out.flag[i] == kNumLevel1) {
      out.reaches_tangent = true;
      out.step = i;
      break;
    }
  }
  return out;
}

Distribution fully_parabolic_distribution(const MultiPoly& k) {
  const MultiPoly zero;
  return Distribution({VectorField::frame(1, k, zero, zero, zero),
                       VectorField::frame(zero, zero, Rational(-2) * k, 1, zero),
                       VectorField::frame(zero, zero, Rational(-3) * k * k, k, 1)});
}

}  // namespace mae
