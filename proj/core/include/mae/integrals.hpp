#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mae/jet.hpp"
#include "mae/monge_ampere.hpp"

namespace mae {

enum class Provenance { User, Search };

struct CandidateIntegral {
  MultiPoly f;
  Provenance provenance = Provenance::User;
};

// X(f) == 0 exactly for every generator X of d.
bool is_first_integral(const MultiPoly& f, const Distribution& d);

enum class IntegralVerdict { Yes, YesVacuous, No };
const char* verdict_name(IntegralVerdict v);

struct IntermediateCheck {
  IntegralVerdict verdict = IntegralVerdict::YesVacuous;
  std::optional<std::string> witness;
  std::size_t probes = 0;
  // Probes at which some plane annihilates df.
  std::size_t nonempty = 0;
  // Probes skipped because df vanishes on C^1 there.
  std::size_t singular = 0;
};

// At each probe m1 the planes with df|L = 0 form an affine family in p111..p222; F must vanish on all of it.
// Probes where df vanishes on C^1 are skipped and replaced by further random ones.
IntermediateCheck is_intermediate_integral(const MultiPoly& f, const MultiPoly& F, const ProbeOptions& opts = {},
                                           std::size_t probes = 5);

struct DistributionRoute {
  bool integral = false;
  std::optional<std::size_t> via;
  IntegralVerdict direct = IntegralVerdict::No;
  bool agrees = true;
  std::vector<std::string> notes;
};
// First integral of some D with E_D = E, cross-checked against the direct definition.
DistributionRoute intermediate_integrals_via_distributions(const MultiPoly& f, const MultiPoly& F,
                                                           const ProbeOptions& opts = {});

// Basis, modulo constants, of polynomial first integrals of degree <= max_degree in x1..p22.
std::vector<CandidateIntegral> search_first_integrals(const Distribution& d, int max_degree);

struct FlagVerdict {
  bool reaches_tangent = false;
  std::size_t step = 0;  // derived step at which rank 8 is reached
  std::vector<std::size_t> flag;
};
FlagVerdict derived_flag_criterion(const Distribution& d);

// <D_1 + k D_2, -2k d/dp11 + d/dp12, -3k^2 d/dp11 + k d/dp12 + d/dp22>, whose equation is
// p111 + 3k p112 + 3k^2 p122 + k^3 p222.
Distribution fully_parabolic_distribution(const MultiPoly& k);

}  // namespace mae
