#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mae {

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;  // the first failing case
  std::vector<std::string> notes;
  bool ok() const { return failures == 0; }
};

// roundtrip | orthogonality | strong-char | omega-restriction | integrals | quasilinear-identity
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t n_cases);

// D -> E_D -> recover with a one-dimensional vertical part.
SuiteResult roundtrip_suite(std::uint64_t seed, std::size_t n_cases);
// Two-dimensional vertical parts: pairwise orthogonal triples, each with equation proportional to E_D.
SuiteResult orthogonality_suite(std::uint64_t seed, std::size_t n_cases);
// Every characteristic line of a random Boillat equation is strong, at 4 bases each.
SuiteResult strong_char_suite(std::uint64_t seed, std::size_t n_cases);
// E_omega for omega = rho1 ^ rho2 against E_D for D = ker rho1 cap ker rho2 cap C^1.
SuiteResult omega_restriction_suite(std::uint64_t seed, std::size_t n_cases);
// Searched first integrals are intermediate integrals of E_D.
SuiteResult integrals_suite(std::uint64_t seed, std::size_t n_cases);
// The quasi-linear coefficient formula against the 5x5 determinant.
SuiteResult quasilinear_identity_suite(std::uint64_t seed, std::size_t n_cases);

// A non-strong characteristic line of f at some probe base, if any.
std::optional<std::string> non_strong_witness(const std::string& expr, std::uint64_t seed);

}  // namespace mae
