#pragma once

// Reference computations for the tests. Nothing here calls into the library's
// geometry beyond its plain value types, so agreement is a real cross-check.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "slopepoly/geometry.hpp"

namespace oracle {

using quad = __float128;

struct Pt {
  long double x = 0;
  long double y = 0;
};

/// Line {q : n . q = h} with n the left normal of direction angle theta.
struct Line {
  long double theta = 0;
  long double h = 0;
};

Pt meet(const Line& a, const Line& b);

long double shoelace(const std::vector<Pt>& v);

/// Signed perimeter of a closed chain whose edge i lies on a line of direction
/// angle theta[i].
long double signed_perimeter(const std::vector<Pt>& v, const std::vector<long double>& theta);

/// Signed perimeter of the triangle cut out by the three lines tangent to the
/// unit circle at the origin with the circle on their left.
long double unit_perimeter(long double a, long double b, long double c);

/// p_i for the fan of decomposition triangles (e_0, e_{i+1}, e_{i+2}).
std::vector<long double> chart_p(const std::vector<double>& angles);

/// Line angle sum in units of pi and its integer rounding.
struct Turning {
  long double t = 0;
  long double k_real = 0;
  int k = 0;
};
Turning turning(const std::vector<double>& angles);

/// Signed inradius of the triangle cut out by three directed lines, from the
/// classical incenter/excenter formulas. Empty when no tritangent circle is
/// on the same side of all three lines.
struct Incircle {
  Pt center;
  long double signed_radius = 0;
};
std::optional<Incircle> same_side_circle(const std::array<Line, 3>& lines);

/// Count of the four tritangent circles lying on one side of all lines.
int same_side_count(const std::array<Line, 3>& lines);

/// Edge lines of a polygon whose edge i is parallel to angles[i].
std::vector<Line> lines_of(const slopepoly::PolygonChain& polygon, const std::vector<double>& angles);

/// Decomposition radii of a polygon, each from same_side_circle.
std::vector<long double> radii(const slopepoly::PolygonChain& polygon, const std::vector<double>& angles);

/// Perimeter on the level set {1/2 sum p r^2 = area} with radius `dep`
/// solved on the branch `branch`; `free` lists the other radii in order.
class Chart {
 public:
  Chart(std::vector<long double> p, long double area, int branch, std::size_t dep);
  std::optional<quad> perimeter(const std::vector<quad>& free) const;

 private:
  std::vector<quad> p_;
  quad area_;
  int branch_;
  std::size_t dep_;
};

/// Central-difference Hessian of the perimeter in the radius-0 chart at the
/// tangential point with all radii equal to r. Steps are scaled per entry.
std::vector<std::vector<double>> fd_perimeter_hessian(const std::vector<long double>& p, double r);

/// Central-difference gradient norm of the perimeter at the given radii, in
/// the chart solving for the radius with the largest |p|.
double fd_perimeter_gradient(const std::vector<long double>& p, const std::vector<long double>& r,
                             long double step = 1e-7L);

/// Gaussian elimination with partial pivoting.
long double determinant(std::vector<std::vector<long double>> a);

/// Cyclic polygon data straight from the vertex positions.
struct Cyclic {
  std::vector<Pt> vertices;
  std::vector<int> eps;
  std::vector<long double> alpha;
  long double b = 0;
  int omega = 0;
};
Cyclic cyclic(Pt center, long double radius, const std::vector<double>& phis_deg);

/// Signed perimeter of the polygon cut out by the tangents at the vertices,
/// each directed with the circle on its left.
long double dual_perimeter(Pt center, long double radius, const std::vector<double>& phis_deg);

/// Morse index of the oriented area on the space of polygons with the edge
/// lengths of `vertices`, by finite differences in an implicit closure chart.
/// Empty when an eigenvalue is too small to sign.
std::optional<int> area_index(const std::vector<Pt>& vertices, long double step = 1e-4L);

/// Cyclic Jacobi rotations.
std::vector<long double> symmetric_eigenvalues(std::vector<std::vector<long double>> a);

}  // namespace oracle
