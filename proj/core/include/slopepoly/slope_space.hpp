#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopepoly/geometry.hpp"
#include "slopepoly/lines.hpp"

namespace slopepoly {

// Conventions used by every function in this header. A polygon with edge
// slopes s_0..s_{n-1} is cut out by lines e_0..e_{n-1}; vertex j is
// e_{j-1} ∩ e_j, so edge j (vertex j to vertex j+1) lies on e_j. The
// decomposition triangles fan out from e_0: triangle i (i = 0..n-3) is cut out
// by e_0, e_{i+1}, e_{i+2}.

struct UnitTriangle {
  PolygonChain triangle;
  /// Signed perimeter, equal to twice the oriented area.
  double perimeter;
};

/// Triangle with directed edge lines codirected with a, b, c whose same-side
/// tritangent circle is the unit circle on the left of every line.
UnitTriangle unit_triangle(const DirectedSlope& a, const DirectedSlope& b, const DirectedSlope& c,
                           const Tolerances& tol = {});

/// Signed inradii r_i of the decomposition triangles.
struct RadiiPoint {
  std::vector<double> r;
};

/// Inscribed-radii coordinate chart on the space of polygons with fixed slopes.
struct RadiiChart {
  SlopeSystem system;
  /// Signed perimeter of the unit-inradius decomposition triangle, size n-2.
  std::vector<double> p;
  /// |area| of triangle i = c_i * dist(apex_i, e_0)^2, size n-2.
  std::vector<double> c;
  /// Sum of the p_i.
  double pi_sum = 0.0;
  /// Turning number k (turning sum = k * pi).
  int k = 0;
  /// Number of positive p_i; always k - 1.
  int positive_count = 0;

  std::size_t size() const { return system.size(); }
  std::size_t dimension() const { return p.size(); }
  double abs_p_sum() const;

  /// 1/2 sum p_i r_i^2
  double area(const RadiiPoint& pt) const;
  /// sum p_i r_i
  double perimeter(const RadiiPoint& pt) const;
};

RadiiChart build_chart(const SlopeSystem& system, const Tolerances& tol = {});

/// Rebuilds the polygon from its decomposition radii. The representative has
/// e_0 through the origin and the first decomposition circle's center
/// projecting onto the origin along e_0.
PolygonChain polygon_from_radii(const RadiiChart& chart, const RadiiPoint& pt,
                                const Tolerances& tol = {});

/// Lines e_0..e_{n-1} carrying the edges of `polygon`, with the chart's slopes.
/// Throws SlopeMismatch when an edge is not parallel to its slope.
std::vector<DirectedLine> edge_lines(const SlopeSystem& system, const PolygonChain& polygon,
                                     const Tolerances& tol = {});

/// Decomposition triangle i of the polygon cut out by `lines`.
PolygonChain decomposition_triangle(const std::vector<DirectedLine>& lines, std::size_t i,
                                    const Tolerances& tol = {});

RadiiPoint radii_of_polygon(const RadiiChart& chart, const PolygonChain& polygon,
                            const Tolerances& tol = {});

struct NormalizedCoordinates {
  /// x_i = sqrt(c_i) * signed distance of apex_i from e_0.
  std::vector<double> x;
  double positive_sum = 0.0;  ///< sum over p_i > 0 of x_i^2
  double negative_sum = 0.0;  ///< sum over p_i < 0 of x_i^2
  /// x / sqrt(positive_sum), present for polygons of positive area.
  std::optional<std::vector<double>> normalized;
};

NormalizedCoordinates normalized_coordinates(const RadiiChart& chart, const PolygonChain& polygon,
                                             const Tolerances& tol = {});

/// S^sphere x D^disc; a negative sphere dimension marks an empty component.
struct ComponentTopology {
  int sphere_dim = 0;
  int disc_dim = 0;
  bool empty() const { return sphere_dim < 0; }
  std::string to_string() const;
};

struct TopologyReport {
  int n = 0;
  int k = 0;
  ComponentTopology negative;  ///< area -1 component
  ComponentTopology positive;  ///< area +1 component
};

TopologyReport topology_report(const SlopeSystem& system, const Tolerances& tol = {});

}  // namespace slopepoly
