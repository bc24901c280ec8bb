#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mae/integrals.hpp"
#include "mae/linalg.hpp"
#include "mae/metasymplectic.hpp"
#include "mae/monge_ampere.hpp"
#include "mae/parser.hpp"
#include "mae/suites.hpp"
#include "mae/symbol_cone.hpp"

using namespace mae;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

Distribution rows(const std::vector<RationalVector>& r) { return Distribution::from_frame_rows(r); }

RationalMatrix echelon(const Distribution& d) { return rref(d.frame_matrix_at(Point{})); }

bool same_echelon(const Distribution& a, const Distribution& b) { return echelon(a) == echelon(b); }

// Each expected distribution appears exactly once among the found ones.
bool same_set(const std::vector<Distribution>& found, const std::vector<Distribution>& expected) {
  if (found.size() != expected.size()) return false;
  std::vector<bool> used(found.size(), false);
  for (const auto& e : expected) {
    bool hit = false;
    for (std::size_t i = 0; i < found.size() && !hit; ++i) {
      if (!used[i] && same_echelon(found[i], e)) used[i] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

const Distribution& example(int i) {
  static const Distribution d1 = rows({{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 2, 0, 1}});
  static const Distribution d2 = rows({{1, 1, 0, 0, 0}, {0, 0, 2, 1, 0}, {0, 0, 0, 0, 1}});
  static const Distribution d3 = rows({{1, -2, 0, 0, 0}, {0, 0, 1, -1, 0}, {0, 0, 0, 0, 1}});
  return i == 1 ? d1 : i == 2 ? d2 : d3;
}

Verdict cone_examples() {
  const JetPoint origin = JetPoint::zero(1);
  struct Case {
    const char* f;
    std::vector<Distribution> expected;
  };
  const std::vector<Case> cases{
      {"p111 - p112 - 2*p122", {example(1), example(2), example(3)}},
      {"p122",
       {rows({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}),
        rows({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}})}},
      {"p111", {rows({{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}})}},
  };
  Verdict v{true, ""};
  for (const auto& c : cases) {
    const auto t = std::chrono::steady_clock::now();
    const ConeSample cs = cone_sample(parse_expr(c.f), origin, kDefaultSeed);
    const double s = seconds_since(t);
    const bool ok = same_set(cs.linear_components, c.expected) && s < 1.0;
    v.pass = v.pass && ok;
    v.detail += std::string(v.detail.empty() ? "" : "; ") + c.f + ": " +
                std::to_string(cs.linear_components.size()) + " distributions" + (ok ? "" : " MISMATCH") + " in " +
                fmt(s);
  }
  return v;
}

// Omega(h_i, v) over the vertical generators v of D_j, as one projective line.
std::optional<LDualElement> pairing_line(const Distribution& di, const Distribution& dj) {
  const HorizontalSplit si = split_horizontal(di);
  const HorizontalSplit sj = split_horizontal(dj);
  std::optional<LDualElement> line;
  for (const auto& v : sj.vertical) {
    const LDualElement w = omega_bilinear(VectorField::frame(si.horizontal), VectorField::frame(v));
    if (w.is_zero()) continue;
    if (line && !same_line(*line, w)) return std::nullopt;
    if (!line) line = w;
  }
  return line;
}

Verdict canonical_lines() {
  const GoursatDetection det = detect_goursat(parse_expr("p111 - p112 - 2*p122"));
  // Order the computed triple as in the example by matching spans.
  std::array<std::optional<Distribution>, 4> d;
  for (const auto& x : det.distributions) {
    for (int i = 1; i <= 3; ++i) {
      if (same_echelon(x, example(i))) d[static_cast<std::size_t>(i)] = x;
    }
  }
  if (!d[1] || !d[2] || !d[3]) return {false, "triple not found"};
  struct Pair {
    int i, j;
    LDualElement expected;
    const char* name;
  };
  const std::vector<Pair> pairs{{1, 2, {2, 1}, "(D1,D2) = <2 d/dp1 + d/dp2>"},
                                {1, 3, {1, -1}, "(D1,D3) = <d/dp1 - d/dp2>"},
                                {2, 3, {0, 1}, "(D2,D3) = <d/dp2>"}};
  Verdict v{true, ""};
  for (const auto& p : pairs) {
    const auto line = pairing_line(*d[static_cast<std::size_t>(p.i)], *d[static_cast<std::size_t>(p.j)]);
    const bool ok = line && same_line(*line, p.expected);
    v.pass = v.pass && ok;
    v.detail += std::string(v.detail.empty() ? "" : "; ") + p.name + (ok ? " ok" : " MISMATCH");
  }
  return v;
}

Verdict derived_dimensions() {
  const GoursatDetection det = detect_goursat(parse_expr("p122"));
  const Distribution d1 = rows({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
  const Distribution d2 = rows({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}});
  std::optional<std::size_t> dim1, dim2;
  const Point probe = det.base.full();
  for (const auto& x : det.distributions) {
    if (same_echelon(x, d1)) dim1 = derived_flag_at(x, probe, 1).back();
    if (same_echelon(x, d2)) dim2 = derived_flag_at(x, probe, 1).back();
  }
  const bool ok = dim1 == 5u && dim2 == 4u;
  return {ok, "dim D1' = " + (dim1 ? std::to_string(*dim1) : std::string("?")) +
                  ", dim D2' = " + (dim2 ? std::to_string(*dim2) : std::string("?"))};
}

Verdict parabolic_flags() {
  const auto t = std::chrono::steady_clock::now();
  struct Case {
    const char* k;
    std::vector<std::size_t> flag;
  };
  const std::vector<Case> cases{{"u", {3, 4, 5}}, {"p1", {3, 4, 6}}, {"p11", {3, 6, 8}}};
  Sampler s(kDefaultSeed);
  Verdict v{true, ""};
  std::size_t retries = 0;
  for (const auto& c : cases) {
    const Distribution d = fully_parabolic_distribution(parse_expr(c.k));
    std::size_t agreeing = 0;
    for (int probe = 0; probe < 5; ++probe) {
      // A probe off the generic locus is replaced, at most 8 times.
      for (int attempt = 0; attempt < 9; ++attempt) {
        if (derived_flag_at(d, s.point(), 2) == c.flag) {
          ++agreeing;
          break;
        }
        ++retries;
      }
    }
    const bool ok = agreeing == 5;
    v.pass = v.pass && ok;
    v.detail += std::string(v.detail.empty() ? "" : "; ") + "k = " + c.k + ": " + std::to_string(agreeing) + "/5";
  }
  const double secs = seconds_since(t);
  v.pass = v.pass && secs < 10.0;
  v.detail += ", " + std::to_string(retries) + " retries in " + fmt(secs);
  return v;
}

std::string suite_detail(const SuiteResult& r) {
  std::string out = r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
  if (r.counterexample) out += " [" + *r.counterexample + "]";
  for (const auto& n : r.notes) out += " (" + n + ")";
  return out;
}

Verdict roundtrip() {
  const auto t = std::chrono::steady_clock::now();
  const SuiteResult rank1 = roundtrip_suite(kDefaultSeed, 50);
  const SuiteResult rank2 = orthogonality_suite(kDefaultSeed, 50);
  const double secs = seconds_since(t);
  return {rank1.ok() && rank2.ok() && secs < 60.0,
          suite_detail(rank1) + "; " + suite_detail(rank2) + "; " + fmt(secs)};
}

Verdict quasilinear_identity() {
  const SuiteResult r = quasilinear_identity_suite(kDefaultSeed, 100);
  return {r.ok(), suite_detail(r)};
}

Verdict strong_characteristics() {
  const SuiteResult r = strong_char_suite(kDefaultSeed, 50);
  const auto witness = non_strong_witness("p111 + p112^2", kDefaultSeed);
  return {r.ok() && witness.has_value(),
          suite_detail(r) + "; p111 + p112^2: " + witness.value_or("no non-strong line found")};
}

Verdict omega_restriction() {
  const SuiteResult r = omega_restriction_suite(kDefaultSeed, 30);
  return {r.ok(), suite_detail(r)};
}

Verdict intermediate_integrals() {
  const MultiPoly F = parse_expr("p122");
  const MultiPoly f = parse_expr("p12");
  const IntermediateCheck direct = is_intermediate_integral(f, F);
  const DistributionRoute route = intermediate_integrals_via_distributions(f, F);
  const Distribution d = rows({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}});
  const auto found = search_first_integrals(d, 1);
  // Span equality with {x1, p12} as coefficient vectors over the level-1 coordinates.
  auto coeffs = [](const MultiPoly& p) {
    RationalVector v(kNumLevel1);
    for (std::size_t i = 0; i < kNumLevel1; ++i) v[i] = p.coefficient(Monomial::of(kAllCoordinates[i]));
    return v;
  };
  bool linear = true;
  std::vector<RationalVector> got;
  for (const auto& c : found) {
    linear = linear && c.f.degree() == 1;
    got.push_back(coeffs(c.f));
  }
  const RationalMatrix expected =
      RationalMatrix::from_rows({coeffs(parse_expr("x1")), coeffs(parse_expr("p12"))}, kNumLevel1);
  const bool span = linear && got.size() == 2 && same_row_space(RationalMatrix::from_rows(got, kNumLevel1), expected);
  std::string basis;
  for (const auto& c : found) basis += (basis.empty() ? "" : ", ") + c.f.to_string();
  const bool ok = direct.verdict == IntegralVerdict::Yes && route.integral && route.agrees && span;
  return {ok, std::string("direct ") + verdict_name(direct.verdict) + ", via distribution " +
                  (route.via ? std::to_string(*route.via) : std::string("none")) + ", search {" + basis + "}"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"cone reproduces the worked examples", cone_examples},
      {"canonical lines of the split example", canonical_lines},
      {"derived dimensions for p122", derived_dimensions},
      {"fully parabolic derived flags", parabolic_flags},
      {"roundtrip and orthogonal triples", roundtrip},
      {"quasi-linear coefficient identity", quasilinear_identity},
      {"strong characteristics of Boillat equations", strong_characteristics},
      {"omega restriction equivalence", omega_restriction},
      {"intermediate integrals of p122", intermediate_integrals},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("criterion %zu: %s - %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
