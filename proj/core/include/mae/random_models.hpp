#pragma once

#include <array>

#include "mae/jet.hpp"
#include "mae/monge_ampere.hpp"
#include "mae/sampling.hpp"

namespace mae {

// Polynomial in the level-1 coordinates with `terms` monomials of degree <= max_deg.
MultiPoly random_level1_polynomial(Sampler& s, int terms, int max_deg, int max_num = 3);

// Constant rank-3 distribution with entries in {-2..2} and a one-dimensional vertical part.
Distribution random_vertical_rank1(Sampler& s);
// Constant rank-3 distribution with entries in {-2..2}, a two-dimensional vertical part, and an
// equation whose symbol splits into rational linear factors.
Distribution random_vertical_rank2(Sampler& s);

struct QuasiLinearNormalForm {
  FrameComponents h;  // a D1 + b D2 + vertical part
  FrameComponents x;
  FrameComponents y;
  Distribution distribution() const;
};
QuasiLinearNormalForm random_quasilinear_normal_form(Sampler& s);

BoillatForm random_boillat_form(Sampler& s, int terms = 1, int max_deg = 1);

// Two C^1 covectors (frame coordinates) with polynomial entries, independent at generic points.
std::array<FrameComponents, 2> random_covector_pair(Sampler& s);
// ker rho1 cap ker rho2 inside C^1.
Distribution common_kernel(const FrameComponents& rho1, const FrameComponents& rho2);

}  // namespace mae
