#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mae/jet.hpp"
#include "mae/sampling.hpp"
#include "mae/symbol_cone.hpp"

namespace mae {

// Coframe order on M^(1): dx1, dx2, du, dp1, dp2, dp11, dp12, dp22.
struct OneForm {
  std::array<MultiPoly, kNumLevel1> c;
  MultiPoly apply(const VectorField& x) const;
};

// c1 dx1 + c2 dx2 + c3 dp11 + c4 dp12 + c5 dp22, the covector dual to the adapted frame on C^1.
OneForm frame_covector(const FrameComponents& c);

class TwoForm {
 public:
  TwoForm() = default;
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return w_[i][j]; }
  // Sets the (i, j) entry and its antisymmetric partner.
  void set(std::size_t i, std::size_t j, const MultiPoly& v);
  TwoForm operator+(const TwoForm& o) const;
  bool is_antisymmetric() const;

 private:
  std::array<std::array<MultiPoly, kNumLevel1>, kNumLevel1> w_;
};
TwoForm wedge(const OneForm& a, const OneForm& b);

// R M3 - S M2 + T M1 + B . (p111, p112, p122, p222) + C with
// M1 = p111 p122 - p112^2, M2 = p111 p222 - p112 p122, M3 = p112 p222 - p122^2.
struct BoillatForm {
  std::array<MultiPoly, 3> A;
  std::array<MultiPoly, 4> B;
  MultiPoly C;
  MultiPoly reconstruct() const;
  bool quasi_linear() const { return A[0].is_zero() && A[1].is_zero() && A[2].is_zero(); }
  bool operator==(const BoillatForm&) const = default;
};

// det [[p111 - f111, p112 - f112, p122 - f122], [p112 - f211, p122 - f212, p222 - f222], [R, S, T]].
struct GoursatForm {
  std::array<MultiPoly, 6> f;  // f111, f112, f122, f211, f212, f222
  std::array<MultiPoly, 3> A;  // R, S, T
  bool reduced = false;
  MultiPoly determinant() const;
};

// det of the 5x5 matrix with rows g1, g2, g3, xi1, xi2.
MultiPoly ed_determinant(const FrameComponents& g1, const FrameComponents& g2, const FrameComponents& g3);
MultiPoly build_ED_raw(const Distribution& d);
// Raw determinant with content removed.
MultiPoly build_ED(const Distribution& d);
MultiPoly normalize_equation(const MultiPoly& f);

// Proportional over the field of functions of the level-1 coordinates.
bool proportional(const MultiPoly& f, const MultiPoly& g);
// Proportional after fixing every level-1 coordinate by m1.
bool proportional_on_fiber(const MultiPoly& f, const MultiPoly& g, const JetPoint& m1);
MultiPoly restrict_to_fiber(const MultiPoly& f, const JetPoint& m1);

BoillatForm quasilinear_coefficients(const Distribution& d);
BoillatForm quasilinear_coefficients(const FrameComponents& h, const FrameComponents& x,
                                     const FrameComponents& y);

MultiPoly build_E_omega(const TwoForm& w);
// Two independent C^1 covectors cutting out d, as 1-forms in the frame coframe.
std::array<OneForm, 2> annihilator(const Distribution& d);

BoillatForm boillat_decompose(const MultiPoly& f);

GoursatForm goursat_form(const Distribution& d);

// The quasi-linear D through the characteristic direction `dir` of a fibre equation.
Distribution quasilinear_distribution(const MultiPoly& fiber_equation, const Direction& dir);
std::array<Distribution, 3> decompose_orthogonal_triple(const MultiPoly& f, const JetPoint& m1);

struct ProbeOptions {
  std::optional<JetPoint> base;
  std::uint64_t seed = kDefaultSeed;
};

// Level-1 base points in the order they are tried: the requested one (or the origin), then
// constant points on the schedule 1, -1, 2, 1/2, -2, -1/2, 3, 1/3.
std::vector<JetPoint> probe_bases(const std::optional<JetPoint>& first);

enum class EquationClass { QuasiLinear, FullyNonlinearGoursat, MAEnotGoursat, NotMAE };
const char* class_name(EquationClass c);

struct GoursatDetection {
  EquationClass kind = EquationClass::NotMAE;
  std::optional<BoillatForm> boillat;
  std::string offending_monomial;
  JetPoint base = JetPoint::zero(1);
  std::vector<Distribution> distributions;
  std::optional<GoursatForm> goursat;
  std::optional<bool> orthogonal;
  std::vector<std::string> notes;
};
GoursatDetection detect_goursat(const MultiPoly& f, const ProbeOptions& opts = {});

struct RecoveryCertificate {
  Coordinate distinguished;
  RationalMatrix annihilator;  // 2 x 5, rows (k1, k2, k11, k12, k22) and (h1, h2, h11, h12, h22)
  std::size_t rank = 0;
  MultiPoly delta;
  MultiPoly delta_solved;  // -Delta (p_ijk - G) expressed through the annihilator minors
  bool proportional = false;
};

struct Recovery {
  Distribution distribution;
  JetPoint base = JetPoint::zero(1);
  std::array<OneForm, 2> rho;
  std::optional<RecoveryCertificate> certificate;
  // Further validated components whose equation is proportional to f; nonempty means D is not unique.
  std::vector<Distribution> alternatives;
  std::vector<std::string> notes;
};
Recovery recover_distribution(const MultiPoly& f, const ProbeOptions& opts = {});

struct RecoverabilityReport {
  bool recoverable = true;
  std::size_t lines_checked = 0;
  std::size_t points_checked = 0;
  std::optional<std::string> witness;
};
RecoverabilityReport check_recoverable(const MultiPoly& f, const ProbeOptions& opts = {},
                                       std::size_t bases = 3);

}  // namespace mae
