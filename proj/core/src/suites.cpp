#include "mae/suites.hpp"

#include "mae/errors.hpp"
#include "mae/integrals.hpp"
#include "mae/linalg.hpp"
#include "mae/monge_ampere.hpp"
#include "mae/parser.hpp"
#include "mae/random_models.hpp"
#include "mae/symbol_cone.hpp"

namespace mae {

namespace {

std::string rows_string(const RationalMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "(";
    for (std::size_t c = 0; c < m.cols(); ++c) out += to_string(m(r, c)) + (c + 1 < m.cols() ? ", " : ")");
    if (r + 1 < m.rows()) out += ", ";
  }
  return out + "]";
}

// Frame rows of a constant distribution in reduced echelon form.
std::string constant_string(const Distribution& d) { return rows_string(rref(d.frame_matrix_at(Point{}))); }

void fail(SuiteResult& r, std::size_t index, const std::string& what) {
  ++r.failures;
  if (!r.counterexample) r.counterexample = "case " + std::to_string(index) + ": " + what;
}

SuiteResult start(const char* name, std::uint64_t seed) {
  SuiteResult r;
  r.name = name;
  r.seed = seed;
  return r;
}

bool degenerate_vertical(const Distribution& d) {
  const RationalMatrix r = rref(d.frame_matrix_at(Point{}));
  return r(2, 2) * r(2, 4) == r(2, 3) * r(2, 3);
}

bool line_set_strong(const MultiPoly& f, const ConeSample& cone, std::string* witness) {
  for (std::size_t i = 0; i < cone.points.size(); ++i) {
    for (const auto& line : cone.lines[i]) {
      if (!is_strong_characteristic(f, line, cone.points[i])) {
        if (witness) {
          *witness = "line with minimal polynomial " + line.direction.minpoly.to_string() +
                     (line.direction.at_infinity ? " at infinity" : "") + " over fibre point " + std::to_string(i);
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "orthogonality", "strong-char",
                                              "omega-restriction", "integrals", "quasilinear-identity"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names()) {
    if (n == name) return true;
  }
  return false;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t n_cases) {
  if (name == "roundtrip") return roundtrip_suite(seed, n_cases);
  if (name == "orthogonality") return orthogonality_suite(seed, n_cases);
  if (name == "strong-char") return strong_char_suite(seed, n_cases);
  if (name == "omega-restriction") return omega_restriction_suite(seed, n_cases);
  if (name == "integrals") return integrals_suite(seed, n_cases);
  if (name == "quasilinear-identity") return quasilinear_identity_suite(seed, n_cases);
  throw Error(ErrorCode::InvalidArgument, "unknown suite " + name);
}

SuiteResult roundtrip_suite(std::uint64_t seed, std::size_t n_cases) {
  SuiteResult r = start("roundtrip", seed);
  Sampler s(seed);
  std::size_t degenerate = 0;
  std::size_t generic_failures = 0;
  std::size_t among_alternatives = 0;
  for (std::size_t i = 0; i < n_cases; ++i, ++r.cases) {
    const Distribution d = random_vertical_rank1(s);
    const bool degen = degenerate_vertical(d);
    degenerate += degen ? 1 : 0;
    const MultiPoly f = build_ED(d);
    try {
      const Recovery rec = recover_distribution(f);
      if (same_span(rec.distribution, d)) continue;
      bool listed = false;
      for (const auto& a : rec.alternatives) listed = listed || same_span(a, d);
      among_alternatives += listed ? 1 : 0;
      generic_failures += degen ? 0 : 1;
      fail(r, i,
           "D = " + constant_string(d) + ", F = " + f.to_string() + ", recovered " +
               constant_string(rec.distribution) + "; " + std::to_string(rec.alternatives.size() + 1) +
               " distributions share F" + (listed ? ", D among them" : "") +
               (degen ? "; vertical direction (R, S, T) has RT - S^2 = 0" : ""));
    } catch (const Error& e) {
      generic_failures += degen ? 0 : 1;
      fail(r, i, "D = " + constant_string(d) + ", F = " + f.to_string() + ": " + e.what());
    }
  }
  r.notes.push_back(std::to_string(degenerate) + " draws with RT - S^2 = 0 in the vertical direction");
  r.notes.push_back(std::to_string(generic_failures) + " failures with RT - S^2 != 0");
  r.notes.push_back(std::to_string(among_alternatives) + " failures where D is one of several distributions with the same equation");
  return r;
}

SuiteResult orthogonality_suite(std::uint64_t seed, std::size_t n_cases) {
  SuiteResult r = start("orthogonality", seed);
  Sampler s(seed);
  for (std::size_t i = 0; i < n_cases; ++i, ++r.cases) {
    const Distribution d = random_vertical_rank2(s);
    const MultiPoly f = build_ED(d);
    const std::string where = "D = " + constant_string(d) + ", F = " + f.to_string();
    try {
      const GoursatDetection det = detect_goursat(f);
      if (det.kind != EquationClass::QuasiLinear || det.distributions.size() != 3) {
        fail(r, i, where + ": classified " + class_name(det.kind) + " with " +
                       std::to_string(det.distributions.size()) + " distributions");
        continue;
      }
      if (det.orthogonal != true) {
        fail(r, i, where + ": triple not pairwise orthogonal");
        continue;
      }
      bool found = false;
      bool all = true;
      for (const auto& x : det.distributions) {
        all = all && proportional(build_ED(x), f);
        found = found || same_span(x, d);
      }
      if (!all) fail(r, i, where + ": a member's equation is not proportional to F");
      else if (!found) fail(r, i, where + ": D is not in the triple");
    } catch (const Error& e) {
      fail(r, i, where + ": " + e.what());
    }
  }
  return r;
}

SuiteResult strong_char_suite(std::uint64_t seed, std::size_t n_cases) {
  SuiteResult r = start("strong-char", seed);
  Sampler s(seed);
  std::size_t lines = 0;
  for (std::size_t i = 0; i < n_cases; ++i, ++r.cases) {
    const MultiPoly f = random_boillat_form(s, 2, 1).reconstruct();
    std::size_t bases = 0;
    for (int attempt = 0; attempt < 16 && bases < 4; ++attempt) {
      const JetPoint base = JetPoint::from_point(1, s.point(3, 2)).project(1);
      if (restrict_to_fiber(f, base).max_level() < 2) continue;
      ConeSample cone;
      try {
        cone = cone_sample(f, base, s.next());
      } catch (const Error&) {
        continue;
      }
      ++bases;
      for (const auto& l : cone.lines) lines += l.size();
      std::string witness;
      if (!line_set_strong(f, cone, &witness)) {
        fail(r, i, "F = " + f.to_string() + ": " + witness);
        break;
      }
    }
    if (bases < 4 && r.failures == 0) {
      r.notes.push_back("case " + std::to_string(i) + " used " + std::to_string(bases) + " bases");
    }
  }
  r.notes.push_back(std::to_string(lines) + " characteristic lines checked");
  return r;
}

std::optional<std::string> non_strong_witness(const std::string& expr, std::uint64_t seed) {
  const MultiPoly f = parse_expr(expr);
  for (const auto& base : probe_bases(std::nullopt)) {
    if (restrict_to_fiber(f, base).max_level() < 2) continue;
    ConeSample cone;
    try {
      cone = cone_sample(f, base, seed);
    } catch (const Error&) {
      continue;
    }
    std::string witness;
    if (!line_set_strong(f, cone, &witness)) return witness;
  }
  return std::nullopt;
}

SuiteResult omega_restriction_suite(std::uint64_t seed, std::size_t n_cases) {
  SuiteResult r = start("omega-restriction", seed);
  Sampler s(seed);
  std::size_t trivial = 0;
  for (std::size_t i = 0; i < n_cases; ++i, ++r.cases) {
    const auto rho = random_covector_pair(s);
    const Distribution d = common_kernel(rho[0], rho[1]);
    const TwoForm w = wedge(frame_covector(rho[0]), frame_covector(rho[1]));
    std::optional<MultiPoly> fd;
    std::optional<MultiPoly> fw;
    try {
      fd = build_ED(d);
    } catch (const Error&) {
    }
    try {
      fw = build_E_omega(w);
    } catch (const Error&) {
    }
    if (!fd && !fw) {
      ++trivial;
      continue;
    }
    if (!fd || !fw || !proportional(*fd, *fw)) {
      std::string what = "rho1 = (";
      for (std::size_t k = 0; k < 5; ++k) what += rho[0][k].to_string() + (k < 4 ? ", " : "), rho2 = (");
      for (std::size_t k = 0; k < 5; ++k) what += rho[1][k].to_string() + (k < 4 ? ", " : ")");
      what += ": E_D = " + (fd ? fd->to_string() : std::string("none")) +
              ", E_omega = " + (fw ? fw->to_string() : std::string("none"));
      fail(r, i, what);
    }
  }
  if (trivial > 0) r.notes.push_back(std::to_string(trivial) + " pairs give no third-order equation either way");
  return r;
}

SuiteResult integrals_suite(std::uint64_t seed, std::size_t n_cases) {
  SuiteResult r = start("integrals", seed);
  Sampler s(seed);
  std::size_t found = 0;
  std::size_t short_degree = 0;
  for (std::size_t i = 0; i < n_cases; ++i, ++r.cases) {
    const Distribution d = i % 2 == 0 ? random_vertical_rank1(s) : random_vertical_rank2(s);
    const MultiPoly f = build_ED(d);
    const auto integrals = search_first_integrals(d, 2);
    found += integrals.size();
    if (integrals.empty() && !derived_flag_criterion(d).reaches_tangent) ++short_degree;
    for (const auto& c : integrals) {
      if (!is_first_integral(c.f, d)) {
        fail(r, i, "D = " + constant_string(d) + ": search returned " + c.f.to_string() + ", not a first integral");
        break;
      }
      const IntermediateCheck v = is_intermediate_integral(c.f, f, ProbeOptions{std::nullopt, s.next()});
      if (v.verdict == IntegralVerdict::No) {
        fail(r, i, "D = " + constant_string(d) + ", f = " + c.f.to_string() + ": " + v.witness.value_or(""));
        break;
      }
    }
  }
  r.notes.push_back(std::to_string(found) + " first integrals of degree <= 2 checked");
  if (short_degree > 0) {
    r.notes.push_back(std::to_string(short_degree) +
                      " distributions below the tangent bundle had no integral of degree <= 2");
  }
  return r;
}

SuiteResult quasilinear_identity_suite(std::uint64_t seed, std::size_t n_cases) {
  SuiteResult r = start("quasilinear-identity", seed);
  Sampler s(seed);
  for (std::size_t i = 0; i < n_cases; ++i, ++r.cases) {
    const auto nf = random_quasilinear_normal_form(s);
    const MultiPoly formula = quasilinear_coefficients(nf.h, nf.x, nf.y).reconstruct();
    const MultiPoly direct = ed_determinant(nf.h, nf.x, nf.y);
    if (formula != direct && formula != -direct) {
      fail(r, i, "formula " + formula.to_string() + " against determinant " + direct.to_string());
    }
  }
  return r;
}

}  // namespace mae
