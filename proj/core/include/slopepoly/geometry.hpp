#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "slopepoly/tolerances.hpp"

namespace slopepoly {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Reduces an angle to [0, 2*pi).
double wrap_two_pi(double angle);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
/// Counterclockwise rotation by a quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Orientation of a line through the origin, stored as an angle in [0, 2*pi).
class DirectedSlope {
 public:
  DirectedSlope() = default;
  static DirectedSlope from_radians(double angle) { return DirectedSlope(wrap_two_pi(angle)); }
  static DirectedSlope from_degrees(double deg) { return from_radians(deg_to_rad(deg)); }

  double angle() const { return angle_; }
  double degrees() const { return rad_to_deg(angle_); }
  Vec2 direction() const { return {std::cos(angle_), std::sin(angle_)}; }
  /// Unit normal pointing to the left of the direction.
  Vec2 left_normal() const { return perp(direction()); }
  DirectedSlope reversed() const { return from_radians(angle_ + kPi); }

 private:
  explicit DirectedSlope(double a) : angle_(a) {}
  double angle_ = 0.0;
};

/// An ordered tuple of at least three directed slopes, pairwise non-parallel
/// as undirected lines.
class SlopeSystem {
 public:
  explicit SlopeSystem(std::vector<DirectedSlope> slopes, const Tolerances& tol = {});
  static SlopeSystem from_degrees(std::span<const double> degrees, const Tolerances& tol = {});
  static SlopeSystem from_radians(std::span<const double> radians, const Tolerances& tol = {});

  std::size_t size() const { return slopes_.size(); }
  const DirectedSlope& operator[](std::size_t i) const { return slopes_[i]; }
  /// Cyclic access: index i is taken modulo size().
  const DirectedSlope& at_cyclic(std::ptrdiff_t i) const;
  std::span<const DirectedSlope> slopes() const { return slopes_; }

  /// Relabels cyclically so that slope `shift` becomes the first one.
  SlopeSystem rotated(std::size_t shift) const;
  /// Every direction reversed; the underlying lines are unchanged.
  SlopeSystem reversed_directions() const;

 private:
  std::vector<DirectedSlope> slopes_;
};

/// Oriented closed broken line given by its vertex list, treated cyclically.
/// Edge i runs from vertex i to vertex i+1.
class PolygonChain {
 public:
  explicit PolygonChain(std::vector<Vec2> vertices, const Tolerances& tol = {});

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vec2> vertices() const { return vertices_; }
  const Vec2& operator[](std::size_t i) const { return vertices_[i]; }
  const Vec2& vertex(std::ptrdiff_t i) const;
  /// Edge vector from vertex i to vertex i+1.
  Vec2 edge(std::ptrdiff_t i) const { return vertex(i + 1) - vertex(i); }
  /// Largest pairwise vertex distance.
  double diameter() const;

  PolygonChain reversed() const;
  PolygonChain translated(Vec2 offset) const;
  /// Dilation about the origin; negative factors give the point reflection.
  PolygonChain scaled(double factor) const;

 private:
  std::vector<Vec2> vertices_;
};

struct TurningSum {
  double t = 0.0;  ///< radians
  int k = 0;       ///< t / pi
};

struct TurnCounts {
  int right = 0;
  int left = 0;
};

/// Shoelace area; the sign encodes orientation.
double oriented_area(const PolygonChain& polygon);
double oriented_area(std::span<const Vec2> vertices);

/// Winding number of the polygon around x, by angle summation.
/// Throws PointOnBoundary when x is within on_boundary * diameter of an edge.
int winding_number(const PolygonChain& polygon, Vec2 x, const Tolerances& tol = {});

/// Smallest positive counterclockwise rotation taking line r to line s, in (0, pi).
double line_angle(const DirectedSlope& r, const DirectedSlope& s, const Tolerances& tol = {});

/// Cyclic sum of line angles between consecutive slopes.
TurningSum turning_sum(const SlopeSystem& system, const Tolerances& tol = {});

/// Right (clockwise) and left (counterclockwise) sub-pi turns between
/// consecutive directed slopes, cyclically.
TurnCounts turn_counts(const SlopeSystem& system);
/// Same count for any cyclic list of directions; only consecutive directions
/// must be non-parallel.
TurnCounts turn_counts(std::span<const DirectedSlope> directions, const Tolerances& tol = {});

/// Sum of edge lengths signed by whether each edge is traversed along its
/// declared direction. Throws SlopeMismatch if an edge is not parallel to it.
double signed_perimeter(const PolygonChain& polygon, std::span<const DirectedSlope> directions,
                        const Tolerances& tol = {});
double signed_perimeter(const PolygonChain& polygon, const SlopeSystem& system,
                        const Tolerances& tol = {});

}  // namespace slopepoly
