#pragma once

#include <array>

#include "slopepoly/geometry.hpp"

namespace slopepoly {

/// Oriented line {q : n . q = offset}, where n is the left normal of the slope.
/// Points with positive signed distance lie to the left.
struct DirectedLine {
  DirectedSlope slope;
  double offset = 0.0;

  static DirectedLine through(const DirectedSlope& slope, Vec2 point) {
    return {slope, dot(slope.left_normal(), point)};
  }
  /// The line with this slope tangent to the circle (center, signed radius):
  /// positive radius puts the circle on the left, negative on the right.
  static DirectedLine tangent_to(const DirectedSlope& slope, Vec2 center, double signed_radius) {
    return {slope, dot(slope.left_normal(), center) - signed_radius};
  }

  double signed_distance(Vec2 x) const { return dot(slope.left_normal(), x) - offset; }
  Vec2 foot(Vec2 x) const { return x - slope.left_normal() * signed_distance(x); }
};

/// Intersection of two lines. Throws ReconstructionDegenerate when the solve
/// is worse conditioned than tol.max_condition.
Vec2 intersect(const DirectedLine& a, const DirectedLine& b, const Tolerances& tol = {});

struct Circle {
  Vec2 center;
  double radius = 0.0;  ///< unsigned
};

/// A circle tangent to three lines together with the side (+1 left, -1 right,
/// 0 on the line) on which it lies for each of them.
struct TritangentCircle {
  Circle circle;
  std::array<int, 3> sides{};
};

/// The four circles tangent to three pairwise non-parallel lines (incircle and
/// excircles of the triangle they bound).
std::array<TritangentCircle, 4> tritangent_circles(const std::array<DirectedLine, 3>& lines,
                                                   const Tolerances& tol = {});

struct InscribedCircle {
  Vec2 center;
  double signed_radius = 0.0;
};

/// The tritangent circle lying to the left of all three directed lines
/// (positive radius) or to the right of all three (negative radius).
/// Concurrent lines give radius zero centered at the common point.
InscribedCircle inscribed_circle(const std::array<DirectedLine, 3>& lines, const Tolerances& tol = {});

}  // namespace slopepoly
