#pragma once

namespace slopepoly {

/// Numerical thresholds used throughout the library. Every checked operation
/// takes one of these; the defaults are the documented operating point.
struct Tolerances {
  /// Angular separation (radians) below which two lines count as parallel.
  double parallel = 1e-9;
  /// Point-on-edge distance, relative to the polygon diameter.
  double on_boundary = 1e-9;
  /// Distance below which consecutive vertices coincide, relative to diameter.
  double degenerate = 1e-12;
  /// Allowed deviation of a turning sum or winding sum from an integer.
  double integrality = 1e-9;
  /// Residual allowed when rounding a winding number, in turns.
  double winding_residual = 1e-6;
  /// |Pi| <= exceptional * sum|p_i| classifies a slope system as exceptional.
  double exceptional = 1e-9;
  /// Hessian eigenvalue dead band for the perimeter, relative to max|H|.
  double eigen_band = 1e-8;
  /// Eigenvalue dead band for the projected area Hessian, relative to the
  /// largest entry of the projected or unprojected Lagrangian Hessian.
  double area_band = 1e-7;
  /// Minimum gap (radians) between a half central angle and pi/2.
  double antipodal = 1e-6;
  /// Minimum central angle (radians) between consecutive cyclic vertices.
  double coincident = 1e-9;
  /// |B| < bifurcation * sum tan(alpha_i) flags a bifurcating polygon.
  double bifurcation = 1e-9;
  /// Relative length mismatch accepted when checking prescribed edge lengths.
  double length = 1e-9;
  /// Projected-gradient norm, relative to sum l_i^2, accepted as critical.
  double criticality = 1e-8;
  /// Finite-difference perimeter gradient norm accepted at a constructed
  /// tangential critical point.
  double gradient = 1e-6;
  /// Relative error accepted in the Hessian determinant identity.
  double det_identity = 1e-9;
  /// Chart-law and tangential-point identities, relative to their scale.
  double chart_law = 1e-10;
  /// Largest condition number accepted in a line-intersection solve.
  double max_condition = 1e12;

  bool operator==(const Tolerances&) const = default;

  /// Multiplies every threshold by `factor` (the condition bound is divided).
  Tolerances scaled(double factor) const {
    Tolerances t = *this;
    t.parallel *= factor;
    t.on_boundary *= factor;
    t.degenerate *= factor;
    t.integrality *= factor;
    t.winding_residual *= factor;
    t.exceptional *= factor;
    t.eigen_band *= factor;
    t.area_band *= factor;
    t.antipodal *= factor;
    t.coincident *= factor;
    t.bifurcation *= factor;
    t.length *= factor;
    t.criticality *= factor;
    t.gradient *= factor;
    t.det_identity *= factor;
    t.chart_law *= factor;
    t.max_condition /= factor;
    return t;
  }
};

}  // namespace slopepoly
