#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mae/jet.hpp"
#include "mae/sampling.hpp"

namespace mae::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCounterexample = 1, kParseError = 2, kNotMAE = 3, kDegenerate = 4 };

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::optional<JetPoint> probe_point;
};

struct Outcome {
  int exit_code = kOk;
  Json report;
};

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

// {"x1": "1/2", "p11": 3, ...}; missing coordinates are 0.
JetPoint parse_probe_point(const Json& j);
// {"generators": [{"h1": expr, "h2": expr, "v11": expr, "v12": expr, "v22": expr}, ...]}
Distribution parse_distribution(const Json& j);
Json distribution_json(const Distribution& d);

Outcome classify(const std::string& expr, const Options& opts);
Outcome cone(const std::string& expr, std::size_t probes, const Options& opts);
Outcome build(const std::string& distribution_text, const Options& opts);
Outcome recover(const std::string& expr, const Options& opts);
Outcome orthogonal(const std::string& distribution_text, const Options& opts);
Outcome integrals(const std::string& expr, const std::vector<std::string>& candidates,
                  std::optional<int> search_degree, const Options& opts);
Outcome verify(const std::string& suite, std::size_t n_cases, const Options& opts);

std::string render(const Outcome& o, bool pretty);

}  // namespace mae::cli
