#pragma once

#include <optional>
#include <span>
#include <vector>

#include "slopepoly/geometry.hpp"
#include "slopepoly/tangential_morse.hpp"

namespace slopepoly {

/// Polygon inscribed in a circle, given by the angular positions of its
/// vertices. Consecutive vertices are distinct and never antipodal.
class CyclicPolygon {
 public:
  CyclicPolygon(Vec2 center, double radius, std::vector<double> phis, const Tolerances& tol = {});
  static CyclicPolygon from_degrees(Vec2 center, double radius, std::span<const double> phis_deg,
                                    const Tolerances& tol = {});

  Vec2 center() const { return center_; }
  double radius() const { return radius_; }
  std::span<const double> phis() const { return phis_; }
  std::size_t size() const { return phis_.size(); }

  Vec2 vertex(std::size_t i) const;
  PolygonChain polygon(const Tolerances& tol = {}) const;
  /// Counterclockwise increment (phi_{i+1} - phi_i) mod 2*pi, in (0, 2*pi).
  double increment(std::size_t i) const;

 private:
  Vec2 center_;
  double radius_;
  std::vector<double> phis_;
};

struct CyclicInvariants {
  std::vector<int> eps;       ///< +1 when the center is left of edge i
  std::vector<double> alpha;  ///< half the unoriented central angle of edge i
  std::vector<double> chord;  ///< 2 R sin(alpha_i)
  int e = 0;                  ///< number of positive eps
  int omega = 0;              ///< winding number around the center
  double bifurcation_sum = 0.0;  ///< sum eps_i tan(alpha_i)
  double tan_sum = 0.0;          ///< sum tan(alpha_i)
};

CyclicInvariants cyclic_invariants(const CyclicPolygon& polygon, const Tolerances& tol = {});

/// Tangential polygon cut out by the tangents at the vertices, each oriented
/// with the circle on its left. Edge i lies on the tangent at vertex i.
struct DualPolygon {
  PolygonChain polygon;
  std::vector<DirectedSlope> directions;
  Vec2 incenter;
  double inradius = 0.0;  ///< signed, equals +R
  double perimeter = 0.0;
  double area = 0.0;
};

DualPolygon dual_polygon(const CyclicPolygon& polygon, const Tolerances& tol = {});

bool bifurcation_test(const CyclicPolygon& polygon, const Tolerances& tol = {});

/// Norm of the area gradient projected onto the tangent space of the
/// fixed-length closure manifold (edge-angle chart, first angle frozen).
/// Zero exactly at cyclic configurations.
double area_criticality_residual(const PolygonChain& polygon, std::span<const double> lengths,
                                 const Tolerances& tol = {});

struct AreaIndexReport {
  int index = 0;
  std::vector<double> eigenvalues;
  double residual = 0.0;
};

/// Morse index of the oriented area on the fixed-length configuration space,
/// from the projected Hessian of the Lagrangian. Throws DegenerateCritical when
/// an eigenvalue falls in the dead band.
AreaIndexReport area_morse_index_report(const CyclicPolygon& polygon, const Tolerances& tol = {});
int area_morse_index_numeric(const CyclicPolygon& polygon, const Tolerances& tol = {});

/// e - 1 - 2w - (0 if sum eps tan alpha > 0 else 1). Throws Bifurcating.
int area_morse_index_formula(const CyclicPolygon& polygon, const Tolerances& tol = {});

struct DualityReport {
  double bifurcation_sum = 0.0;
  DualPolygon dual;
  /// The dual's positive-radius critical point (P* rescaled to unit area).
  /// Absent when two non-adjacent dual sides are parallel.
  std::optional<TangentialCritical> dual_critical;
  std::optional<IndexReport> dual_index;
  /// Perimeter index of P* in line-offset coordinates; always computed.
  OffsetIndexReport dual_offsets;
  int mu_area_numeric = 0;
  int mu_area_formula = 0;
  int mu_dual_perimeter = 0;
  bool identity_holds = false;
};

DualityReport duality_index_check(const CyclicPolygon& polygon, const Tolerances& tol = {});

}  // namespace slopepoly
