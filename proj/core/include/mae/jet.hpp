#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "mae/linalg.hpp"
#include "mae/multipoly.hpp"

namespace mae {

class JetPoint {
 public:
  // `values` must cover exactly the coordinates of `level` (0: x1..p2, 1: ..p22, 2: ..p222).
  JetPoint(int level, const std::map<Coordinate, Rational>& values);
  static JetPoint zero(int level);
  static JetPoint from_point(int level, const Point& p);

  int level() const { return level_; }
  const Rational& operator[](Coordinate c) const;
  // All 12 coordinates, zero above the point's level.
  const Point& full() const { return values_; }
  JetPoint project(int level) const;
  JetPoint with(Coordinate c, const Rational& v) const;

  static std::size_t coordinate_count(int level);
  bool operator==(const JetPoint& o) const { return level_ == o.level_ && values_ == o.values_; }

 private:
  JetPoint() = default;
  int level_ = 0;
  Point values_{};
};

Rational eval_at(const MultiPoly& p, const JetPoint& point);

// Frame of C^1: (D1, D2, d/dp11, d/dp12, d/dp22).
using FrameComponents = std::array<MultiPoly, 5>;
// Coordinate frame of M^(1): (d/dx1, d/dx2, d/du, d/dp1, d/dp2, d/dp11, d/dp12, d/dp22).
using FullComponents = std::array<MultiPoly, kNumLevel1>;

class VectorField {
 public:
  VectorField() = default;
  static VectorField frame(const FrameComponents& c);
  static VectorField frame(MultiPoly h1, MultiPoly h2, MultiPoly v11, MultiPoly v12, MultiPoly v22);
  static VectorField full(const FullComponents& c);
  static VectorField coordinate(Coordinate c);

  const FullComponents& full() const { return full_; }
  bool in_c1() const { return frame_.has_value(); }
  // Throws OutsideC1 when the field leaves C^1.
  const FrameComponents& frame() const;
  const std::optional<FrameComponents>& frame_if_c1() const { return frame_; }

  bool is_zero() const;
  bool is_vertical() const;  // no h1, h2 component (requires C^1)
  MultiPoly apply(const MultiPoly& f) const;
  RationalVector eval_full(const Point& p) const;
  RationalVector eval_frame(const Point& p) const;

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator*(const MultiPoly& f) const;
  bool operator==(const VectorField& o) const { return full_ == o.full_; }

 private:
  void classify();
  FullComponents full_{};
  std::optional<FrameComponents> frame_;
};

VectorField total_derivative(int i);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<VectorField> generators);
  // Constant-coefficient distribution from frame rows.
  static Distribution from_frame_rows(const std::vector<RationalVector>& rows);

  const std::vector<VectorField>& generators() const { return generators_; }
  std::size_t generic_rank() const { return generic_rank_; }
  bool in_c1() const;

  RationalMatrix full_matrix_at(const Point& p) const;
  RationalMatrix frame_matrix_at(const Point& p) const;
  std::size_t rank_at(const Point& p) const { return mae::rank(full_matrix_at(p)); }
  // Index of the sample point that realises the generic rank.
  std::size_t generic_sample() const { return generic_sample_; }
  // Generators that stay independent at the generic sample and span the distribution there.
  Distribution basis() const;

 private:
  std::vector<VectorField> generators_;
  std::size_t generic_rank_ = 0;
  std::size_t generic_sample_ = 0;
};

// Spans agree at every generic sample point (plus any `extra` points).
bool same_span(const Distribution& a, const Distribution& b, const std::vector<Point>& extra = {});
bool contained_in(const Distribution& a, const Distribution& b, const std::vector<Point>& extra = {});

// Generic ranks of D, D', D'', ... until two consecutive ranks agree or max_steps brackets.
std::vector<std::size_t> derived_flag(const Distribution& d, std::size_t max_steps = 8);
// Same chain of generators, ranks evaluated at one probe point.
std::vector<std::size_t> derived_flag_at(const Distribution& d, const Point& probe,
                                         std::size_t steps);
// The distributions D, D', D'', ... themselves.
std::vector<Distribution> derived_chain(const Distribution& d, std::size_t steps);

Distribution vertical_part(const Distribution& d);

class LagrangianPlane {
 public:
  explicit LagrangianPlane(const JetPoint& m2);
  const JetPoint& base() const { return base_; }
  const std::array<Rational, 4>& third_derivatives() const { return p3_; }
  // xi_i = D_i + p_{ijk} d/dp_{jk} as a frame vector.
  RationalVector xi(int i) const;
  VectorField xi_field(int i) const;
  RationalMatrix matrix() const;

 private:
  JetPoint base_;
  std::array<Rational, 4> p3_;
};

LagrangianPlane lagrangian_plane(const JetPoint& m2);
// xi_i with p_{ijk} kept symbolic.
FrameComponents symbolic_xi(int i);

}  // namespace mae
