#include "mae_cli.hpp"

#include <algorithm>
#include <cstdio>

#include "mae/errors.hpp"
#include "mae/integrals.hpp"
#include "mae/metasymplectic.hpp"
#include "mae/monge_ampere.hpp"
#include "mae/parser.hpp"
#include "mae/suites.hpp"
#include "mae/symbol_cone.hpp"

namespace mae::cli {

namespace {

const std::array<const char*, 5> kFrameKeys{"h1", "h2", "v11", "v12", "v22"};

Json point_json(const JetPoint& p);

Json envelope(const std::string& command, const std::string& input, const Options& opts) {
  Json j;
  j["command"] = command;
  j["input"] = input;
  j["input_hash"] = fnv1a_hex(command + "\n" + input);
  j["version"] = kVersion;
  j["seed"] = opts.seed;
  if (opts.probe_point) j["probe_point"] = point_json(*opts.probe_point);
  return j;
}

Outcome failure(Json report, const Error& e) {
  const ErrorCode code = e.code();
  int exit = kDegenerate;
  if (code == ErrorCode::SyntaxError || code == ErrorCode::UnknownVariable) exit = kParseError;
  if (code == ErrorCode::NotMAE) exit = kNotMAE;
  report["error"] = {{"code", error_name(code)}, {"message", e.what()}};
  return {exit, std::move(report)};
}

Json point_json(const JetPoint& p) {
  Json j = Json::object();
  const std::size_t n = JetPoint::coordinate_count(p.level());
  for (std::size_t i = 0; i < n; ++i) j[std::string(name(kAllCoordinates[i]))] = to_string(p.full()[i]);
  return j;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json boillat_json(const BoillatForm& b) {
  Json j;
  j["A"] = Json::array();
  for (const auto& a : b.A) j["A"].push_back(a.to_string());
  j["B"] = Json::array();
  for (const auto& x : b.B) j["B"].push_back(x.to_string());
  j["C"] = b.C.to_string();
  return j;
}

Json one_form_json(const OneForm& w) {
  Json j = Json::array();
  for (const auto& c : w.c) j.push_back(c.to_string());
  return j;
}

Json line_json(const MultiPoly& f, const CharLine& line, const JetPoint& m2) {
  Json j;
  if (line.exact()) {
    j["coords"] = Json::array();
    for (const auto& c : line.coords) j["coords"].push_back(to_string(c));
  } else {
    j["coords"] = line.approx;
    j["minimal_polynomial"] = line.direction.minpoly.to_string();
  }
  j["mult"] = line.multiplicity();
  j["factor"] = factor_name(line.factor);
  j["strong"] = is_strong_characteristic(f, line, m2);
  return j;
}

std::optional<Json> maybe_distribution(const std::optional<Distribution>& d) {
  if (!d) return std::nullopt;
  return distribution_json(*d);
}

Json distributions_json(const std::vector<Distribution>& ds) {
  Json j = Json::array();
  for (const auto& d : ds) j.push_back(distribution_json(d));
  return j;
}

ProbeOptions probe_options(const Options& opts) { return ProbeOptions{opts.probe_point, opts.seed}; }

Distribution read_distribution(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(e.byte, std::string("malformed distribution JSON: ") + e.what());
  }
  return parse_distribution(j);
}

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

JetPoint parse_probe_point(const Json& j) {
  if (!j.is_object()) throw SyntaxError(0, "probe point must be a JSON object");
  JetPoint p = JetPoint::zero(1);
  int level = 1;
  for (const auto& [key, value] : j.items()) {
    const auto c = coordinate_from_name(key);
    if (!c) throw Error(ErrorCode::UnknownVariable, "unknown coordinate " + key);
    if (mae::level(*c) == 2) level = 2;
  }
  p = JetPoint::zero(level);
  for (const auto& [key, value] : j.items()) {
    Rational v;
    if (value.is_string()) v = parse_rational(value.get<std::string>());
    else if (value.is_number_integer()) v = Rational(value.get<long>());
    else throw SyntaxError(0, "coordinate " + key + " needs an integer or a rational string");
    p = p.with(*coordinate_from_name(key), v);
  }
  return p;
}

Distribution parse_distribution(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw SyntaxError(0, "distribution JSON needs a \"generators\" array");
  }
  std::vector<VectorField> gens;
  for (const auto& g : j["generators"]) {
    FrameComponents c;
    for (std::size_t k = 0; k < 5; ++k) {
      if (!g.contains(kFrameKeys[k])) continue;
      const auto& v = g[kFrameKeys[k]];
      if (v.is_string()) c[k] = parse_expr(v.get<std::string>());
      else if (v.is_number_integer()) c[k] = MultiPoly(Rational(v.get<long>()));
      else throw SyntaxError(0, std::string("generator entry ") + kFrameKeys[k] + " must be an expression");
    }
    gens.push_back(VectorField::frame(c));
  }
  if (gens.empty()) throw SyntaxError(0, "distribution has no generators");
  return Distribution(std::move(gens));
}

Json distribution_json(const Distribution& d) {
  bool constant = true;
  for (const auto& g : d.generators()) {
    for (const auto& c : g.frame()) constant = constant && c.is_constant();
  }
  Json gens = Json::array();
  auto push = [&](const std::array<std::string, 5>& row) {
    Json g;
    for (std::size_t k = 0; k < 5; ++k) g[kFrameKeys[k]] = row[k];
    gens.push_back(std::move(g));
  };
  if (constant) {
    const RationalMatrix r = rref(d.frame_matrix_at(Point{}));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      std::array<std::string, 5> row;
      bool zero = true;
      for (std::size_t k = 0; k < 5; ++k) {
        row[k] = to_string(r(i, k));
        zero = zero && r(i, k) == 0;
      }
      if (!zero) push(row);
    }
  } else {
    for (const auto& g : d.basis().generators()) {
      std::array<std::string, 5> row;
      for (std::size_t k = 0; k < 5; ++k) row[k] = g.frame()[k].to_string();
      push(row);
    }
  }
  return Json{{"generators", gens}};
}

Outcome classify(const std::string& expr, const Options& opts) {
  Json report = envelope("classify", expr, opts);
  try {
    const MultiPoly f = parse_expr(expr);
    Json r;
    r["input"] = f.to_string();
    std::optional<BoillatForm> boillat;
    try {
      boillat = boillat_decompose(f);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotMAE) throw;
      r["mae"] = false;
      r["boillat"] = nullptr;
      r["class"] = class_name(EquationClass::NotMAE);
      const std::string what = e.what();
      r["offending_monomial"] = what.substr(what.find(": ") + 2);
      r["distributions"] = Json::array();
      r["orthogonal"] = nullptr;
      r["recoverable_probe"] = false;
      report["result"] = r;
      return {kNotMAE, report};
    }
    const GoursatDetection det = detect_goursat(f, probe_options(opts));
    r["mae"] = true;
    r["boillat"] = boillat_json(*boillat);
    r["class"] = class_name(det.kind);
    r["base"] = point_json(det.base);
    r["distributions"] = distributions_json(det.distributions);
    if (det.orthogonal) r["orthogonal"] = *det.orthogonal;
    else r["orthogonal"] = nullptr;
    r["recoverable_probe"] = check_recoverable(f, probe_options(opts)).recoverable;
    r["notes"] = strings(det.notes);
    report["result"] = r;
    return {kOk, report};
  } catch (const Error& e) {
    return failure(report, e);
  }
}

Outcome cone(const std::string& expr, std::size_t probes, const Options& opts) {
  Json report = envelope("cone", expr + "\nprobes=" + std::to_string(probes), opts);
  try {
    const MultiPoly f = parse_expr(expr);
    std::optional<JetPoint> base;
    for (const auto& b : probe_bases(opts.probe_point)) {
      if (restrict_to_fiber(f, b).max_level() >= 2) {
        base = b;
        break;
      }
    }
    if (!base) throw Error(ErrorCode::ZeroSymbol, "the symbol vanishes over every probe base");
    const auto dist = distinguished_coordinate(f, *base);
    const ConeSample cs = cone_sample(f, *base, canonical_fiber_probes(dist, opts.seed, probes));
    Json r;
    r["base"] = point_json(cs.base);
    r["distinguished"] = cs.distinguished ? Json(std::string(name(*cs.distinguished))) : Json(nullptr);
    r["samples"] = cs.points.size();
    r["point"] = point_json(cs.points.front());
    r["lines"] = Json::array();
    for (const auto& line : cs.lines.front()) r["lines"].push_back(line_json(f, line, cs.points.front()));
    const auto lc = maybe_distribution(cs.linear_component);
    r["linear_component"] = lc ? *lc : Json(nullptr);
    r["linear_components"] = distributions_json(cs.linear_components);
    r["notes"] = strings(cs.notes);
    report["result"] = r;
    return {kOk, report};
  } catch (const Error& e) {
    return failure(report, e);
  }
}

Outcome build(const std::string& distribution_text, const Options& opts) {
  Json report = envelope("build", distribution_text, opts);
  try {
    const Distribution d = read_distribution(distribution_text);
    const MultiPoly f = build_ED(d);
    Json r;
    r["distribution"] = distribution_json(d);
    r["equation"] = f.to_string();
    r["quasi_linear"] = boillat_decompose(f).quasi_linear();
    report["result"] = r;
    return {kOk, report};
  } catch (const Error& e) {
    return failure(report, e);
  }
}

Outcome recover(const std::string& expr, const Options& opts) {
  Json report = envelope("recover", expr, opts);
  try {
    const MultiPoly f = parse_expr(expr);
    boillat_decompose(f);
    const Recovery rec = recover_distribution(f, probe_options(opts));
    Json r;
    r["equation"] = f.to_string();
    r["base"] = point_json(rec.base);
    r["distribution"] = distribution_json(rec.distribution);
    r["alternatives"] = distributions_json(rec.alternatives);
    r["annihilator"] = Json::array({one_form_json(rec.rho[0]), one_form_json(rec.rho[1])});
    if (rec.certificate) {
      const auto& c = *rec.certificate;
      Json cert;
      cert["distinguished"] = std::string(name(c.distinguished));
      cert["rank"] = c.rank;
      cert["delta"] = c.delta.to_string();
      cert["delta_solved"] = c.delta_solved.to_string();
      cert["proportional"] = c.proportional;
      r["certificate"] = cert;
    } else {
      r["certificate"] = nullptr;
    }
    r["notes"] = strings(rec.notes);
    report["result"] = r;
    return {kOk, report};
  } catch (const Error& e) {
    return failure(report, e);
  }
}

Outcome orthogonal(const std::string& distribution_text, const Options& opts) {
  Json report = envelope("orthogonal", distribution_text, opts);
  try {
    const Distribution d = read_distribution(distribution_text);
    const auto [a, b] = orthogonal_complement_pair(d);
    const MultiPoly f = build_ED(d);
    Json r;
    r["distribution"] = distribution_json(d);
    r["equation"] = f.to_string();
    r["pair"] = Json::array({distribution_json(a), distribution_json(b)});
    r["threefold_orthogonal"] = is_threefold_orthogonal(d, a, b);
    r["equations_proportional"] = proportional(build_ED(a), f) && proportional(build_ED(b), f);
    report["result"] = r;
    return {kOk, report};
  } catch (const Error& e) {
    return failure(report, e);
  }
}

Outcome integrals(const std::string& expr, const std::vector<std::string>& candidates,
                  std::optional<int> search_degree, const Options& opts) {
  std::string input = expr;
  for (const auto& c : candidates) input += "\ncandidate=" + c;
  if (search_degree) input += "\ndegree=" + std::to_string(*search_degree);
  Json report = envelope("integrals", input, opts);
  try {
    const MultiPoly f = parse_expr(expr);
    boillat_decompose(f);
    const GoursatDetection det = detect_goursat(f, probe_options(opts));
    Json r;
    r["equation"] = f.to_string();
    r["distributions"] = distributions_json(det.distributions);
    r["candidates"] = Json::array();
    for (const auto& text : candidates) {
      const MultiPoly g = parse_expr(text);
      const IntermediateCheck direct = is_intermediate_integral(g, f, probe_options(opts));
      std::optional<std::size_t> via;
      for (std::size_t i = 0; i < det.distributions.size() && !via; ++i) {
        if (is_first_integral(g, det.distributions[i])) via = i;
      }
      Json c;
      c["f"] = g.to_string();
      c["verdict"] = verdict_name(direct.verdict);
      c["via_distribution"] = via ? Json(*via) : Json(nullptr);
      if (direct.witness) c["witness"] = *direct.witness;
      r["candidates"].push_back(c);
    }
    if (search_degree) {
      Json s;
      s["degree"] = *search_degree;
      std::vector<std::string> basis;
      Json per = Json::array();
      for (const auto& d : det.distributions) {
        Json mine = Json::array();
        for (const auto& c : search_first_integrals(d, *search_degree)) {
          const std::string text = c.f.to_string();
          mine.push_back(text);
          if (std::find(basis.begin(), basis.end(), text) == basis.end()) basis.push_back(text);
        }
        per.push_back(mine);
      }
      s["basis"] = basis;
      s["per_distribution"] = per;
      r["search"] = s;
    } else {
      r["search"] = nullptr;
    }
    report["result"] = r;
    return {kOk, report};
  } catch (const Error& e) {
    return failure(report, e);
  }
}

Outcome verify(const std::string& suite, std::size_t n_cases, const Options& opts) {
  Json report = envelope("verify", suite + "\nn_cases=" + std::to_string(n_cases), opts);
  try {
    const SuiteResult s = run_suite(suite, opts.seed, n_cases);
    Json r;
    r["suite"] = s.name;
    r["cases"] = s.cases;
    r["failures"] = s.failures;
    r["counterexample"] = s.counterexample ? Json(*s.counterexample) : Json(nullptr);
    r["notes"] = strings(s.notes);
    report["result"] = r;
    return {s.ok() ? kOk : kCounterexample, report};
  } catch (const Error& e) {
    return failure(report, e);
  }
}

std::string render(const Outcome& o, bool pretty) { return o.report.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace mae::cli
