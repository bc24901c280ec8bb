#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mae/jet.hpp"

namespace mae {

// c1 d/dp1 + c2 d/dp2, identified with c1 dx1 + c2 dx2.
struct LDualElement {
  MultiPoly c1;
  MultiPoly c2;
  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
  bool operator==(const LDualElement&) const = default;
};

// Projective equality of two elements of L*.
bool same_line(const LDualElement& x, const LDualElement& y);

// A dp11 + B dp12 + C dp22.
struct VerticalCovector {
  MultiPoly a;
  MultiPoly b;
  MultiPoly c;
  MultiPoly apply(const MultiPoly& v11, const MultiPoly& v12, const MultiPoly& v22) const {
    return a * v11 + b * v12 + c * v22;
  }
};

LDualElement omega_bilinear(const VectorField& x, const VectorField& y);
MultiPoly omega_trilinear(const VectorField& x1, const VectorField& x2, const VectorField& x3);
bool is_threefold_orthogonal(const Distribution& d1, const Distribution& d2, const Distribution& d3);

// Roots of A l^2 + B l m + C m^2 as lines l d/dp1 + m d/dp2. A = 0 puts one root at d/dp1.
std::pair<LDualElement, LDualElement> characteristic_lines_of_covector(const VerticalCovector& w);

// A rank-3 distribution split as <h, vertical generators> with h = a D1 + b D2 + f.
struct HorizontalSplit {
  FrameComponents horizontal;
  std::vector<FrameComponents> vertical;
};
HorizontalSplit split_horizontal(const Distribution& d);

// The covector cutting out a 2D vertical space spanned by x and y.
VerticalCovector annihilating_covector(const FrameComponents& x, const FrameComponents& y);

std::pair<Distribution, Distribution> orthogonal_complement_pair(const Distribution& d1);

}  // namespace mae
