#pragma once

#include <Eigen/Core>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "slopepoly/slope_space.hpp"

namespace slopepoly {

/// A tangential polygon normalized to |area| = 1: a critical point of the
/// signed perimeter on the configuration space of its slope system.
struct TangentialCritical {
  PolygonChain polygon;
  RadiiChart chart;
  /// Signed inradius; every decomposition radius equals it.
  double r = 0.0;
  Vec2 incenter;
  double perimeter = 0.0;
  double area = 0.0;
  /// Winding number of the polygon around the incenter.
  int omega = 0;
  TurnCounts turns;
  /// Hessian of the perimeter in the free radii r_1..r_{n-3}, size (n-3)^2.
  Eigen::MatrixXd hessian;
  /// Central-difference gradient norm of the perimeter in the constrained chart.
  double gradient_norm = 0.0;

  std::size_t size() const { return polygon.size(); }
};

/// Both critical points of a non-exceptional space. They lie in the same
/// area component and are point reflections of each other.
struct CriticalPair {
  TangentialCritical positive;  ///< r > 0
  TangentialCritical negative;  ///< r < 0
};

/// The tangential polygon has (numerically) zero area: no critical points.
struct ExceptionalSpace {
  double pi_sum = 0.0;
  double abs_p_sum = 0.0;
};

using CriticalPoints = std::variant<ExceptionalSpace, CriticalPair>;

CriticalPoints tangential_critical_points(const SlopeSystem& system, const Tolerances& tol = {});
CriticalPoints tangential_critical_points(const RadiiChart& chart, const Tolerances& tol = {});

/// Closed-form Hessian at a tangential point with common radius r, indexed by
/// the free radii 1..n-3 (radius 0 is the implicit one).
Eigen::MatrixXd perimeter_hessian(std::span<const double> p, double r);
Eigen::MatrixXd perimeter_hessian(const TangentialCritical& point);
/// Same Hessian with radius `dependent` as the implicit one; rows follow the
/// remaining radii in increasing order. All choices are congruent.
Eigen::MatrixXd perimeter_hessian(std::span<const double> p, double r, std::size_t dependent);

struct DeterminantIdentity {
  double lhs = 0.0;  ///< r^{n-3} det H
  double rhs = 0.0;  ///< (-p_1 Pi / p_0) * prod_{i>=2} (-p_i)
  double relative_error() const;
};

/// Requires n >= 4.
DeterminantIdentity hessian_det_identity(const TangentialCritical& point);

struct IndexReport {
  int mu_eigen = 0;
  int mu_formula = 0;
  /// Implicit radius of the chart the eigenvalues are taken in: the one with
  /// the largest |p_i|.
  std::size_t dependent = 0;
  std::vector<double> eigenvalues;
  /// Signs of the leading principal minors; 0 marks a minor below roundoff.
  std::vector<int> minor_signs;
  /// Sign changes in (1, D_1, ..., D_m).
  int minor_sign_changes = 0;
  /// mu_eigen == mu_formula
  bool agreement = false;
};

/// Counts negative Hessian eigenvalues. Throws DegenerateHessian when an
/// eigenvalue falls in the dead band and InconsistentMinors when the minor
/// sign count disagrees with the eigenvalue count.
IndexReport morse_index_eigen(const TangentialCritical& point, const Tolerances& tol = {});

/// RT - 1 + 2w - [P > 0] for r > 0, LT - 1 - 2w - [P > 0] for r < 0.
int morse_index_formula(const TangentialCritical& point);

struct OffsetIndexReport {
  int index = 0;
  std::vector<double> eigenvalues;
  /// Lagrange multiplier of the area constraint, P / (2 A).
  double multiplier = 0.0;
  /// |grad P - multiplier * grad A| relative to |grad P|.
  double residual = 0.0;
};

/// Morse index of the signed perimeter at a tangential polygon, in line-offset
/// coordinates: edge line i is {q : n_i . q = offsets[i]}. Only consecutive
/// lines must be non-parallel, so systems with parallel sides are allowed.
/// Throws NotCritical when the polygon is not tangential and DegenerateHessian
/// when an eigenvalue falls in the dead band.
OffsetIndexReport perimeter_index_offsets(std::span<const DirectedSlope> directions,
                                          std::span<const double> offsets,
                                          const Tolerances& tol = {});

/// The perimeter restricted to the area level set {area = area_sign}. One
/// radius (`dependent`) is solved for on the branch of sign `branch_sign`;
/// the remaining n-3 radii, in order, are the free coordinates.
class ConstrainedPerimeter {
 public:
  ConstrainedPerimeter(const RadiiChart& chart, double area_sign, double branch_sign,
                       std::size_t dependent = 0);

  /// Dependent index with the largest |p_i|: the best-conditioned chart.
  static std::size_t best_dependent(const RadiiChart& chart);

  std::size_t dependent() const { return dependent_; }
  std::optional<double> solve_dependent(std::span<const double> free) const;
  std::optional<double> perimeter(std::span<const double> free) const;
  /// Central differences with the given step.
  std::vector<double> gradient(std::span<const double> free, double step) const;

 private:
  std::vector<double> p_;
  double area_sign_;
  double branch_sign_;
  std::size_t dependent_;
};

}  // namespace slopepoly
