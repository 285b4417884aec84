#include "slopepoly/cyclic_duality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <sstream>

#include "slopepoly/errors.hpp"
#include "slopepoly/lines.hpp"

namespace slopepoly {

CyclicPolygon::CyclicPolygon(Vec2 center, double radius, std::vector<double> phis,
                             const Tolerances& tol)
    : center_(center), radius_(radius), phis_(std::move(phis)) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw GeometryError(ErrorCode::InvalidInput, "radius must be positive and finite");
  }
  if (!std::isfinite(center_.x) || !std::isfinite(center_.y)) {
    throw GeometryError(ErrorCode::InvalidInput, "center is not finite");
  }
  if (phis_.size() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "a cyclic polygon needs at least 3 vertices");
  }
  for (double& phi : phis_) {
    if (!std::isfinite(phi)) throw GeometryError(ErrorCode::InvalidInput, "angle is not finite");
    phi = wrap_two_pi(phi);
  }
  for (std::size_t i = 0; i < phis_.size(); ++i) {
    const double d = increment(i);
    if (d < tol.coincident || kTwoPi - d < tol.coincident) {
      std::ostringstream os;
      os << "vertices " << i << " and " << (i + 1) % phis_.size() << " coincide";
      throw GeometryError(ErrorCode::CoincidentVertices, os.str());
    }
    const double alpha = 0.5 * std::min(d, kTwoPi - d);
    if (alpha >= 0.5 * kPi - tol.antipodal) {
      std::ostringstream os;
      os << "vertices " << i << " and " << (i + 1) % phis_.size() << " are antipodal";
      throw GeometryError(ErrorCode::AntipodalVertices, os.str());
    }
  }
}

CyclicPolygon CyclicPolygon::from_degrees(Vec2 center, double radius,
                                          std::span<const double> phis_deg, const Tolerances& tol) {
  std::vector<double> phis;
  phis.reserve(phis_deg.size());
  for (double d : phis_deg) phis.push_back(deg_to_rad(d));
  return CyclicPolygon(center, radius, std::move(phis), tol);
}

Vec2 CyclicPolygon::vertex(std::size_t i) const {
  const double phi = phis_[i % phis_.size()];
  return center_ + Vec2{std::cos(phi), std::sin(phi)} * radius_;
}

PolygonChain CyclicPolygon::polygon(const Tolerances& tol) const {
  std::vector<Vec2> v;
  v.reserve(phis_.size());
  for (std::size_t i = 0; i < phis_.size(); ++i) v.push_back(vertex(i));
  return PolygonChain(std::move(v), tol);
}

double CyclicPolygon::increment(std::size_t i) const {
  return wrap_two_pi(phis_[(i + 1) % phis_.size()] - phis_[i]);
}

CyclicInvariants cyclic_invariants(const CyclicPolygon& polygon, const Tolerances& tol) {
  const std::size_t n = polygon.size();
  CyclicInvariants out;
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = polygon.increment(i);
    const bool left = d < kPi;
    const double alpha = 0.5 * std::min(d, kTwoPi - d);
    out.eps.push_back(left ? 1 : -1);
    out.alpha.push_back(alpha);
    out.chord.push_back(2.0 * polygon.radius() * std::sin(alpha));
    if (left) ++out.e;
    winding += left ? d : d - kTwoPi;
    out.bifurcation_sum += (left ? 1.0 : -1.0) * std::tan(alpha);
    out.tan_sum += std::tan(alpha);
  }
  const double turns = winding / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > tol.integrality) {
    throw GeometryError(ErrorCode::NonIntegralTurn, "winding around the center is not integral");
  }
  out.omega = static_cast<int>(rounded);
  return out;
}

DualPolygon dual_polygon(const CyclicPolygon& polygon, const Tolerances& tol) {
  const std::size_t n = polygon.size();
  std::vector<DirectedLine> lines;
  std::vector<DirectedSlope> dirs;
  lines.reserve(n);
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DirectedSlope d = DirectedSlope::from_radians(polygon.phis()[i] + 0.5 * kPi);
    dirs.push_back(d);
    lines.push_back(DirectedLine::tangent_to(d, polygon.center(), polygon.radius()));
  }
  std::vector<Vec2> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& a = lines[(j + n - 1) % n];
    const auto& b = lines[j];
    if (std::abs(cross(a.slope.direction(), b.slope.direction())) < tol.parallel) {
      throw GeometryError(ErrorCode::AntipodalVertices, "adjacent tangents are parallel");
    }
    v[j] = intersect(a, b, tol);
  }
  PolygonChain chain(std::move(v), tol);
  const double perimeter = signed_perimeter(chain, dirs, tol);
  const double area = oriented_area(chain);
  return {std::move(chain), std::move(dirs), polygon.center(), polygon.radius(), perimeter, area};
}

bool bifurcation_test(const CyclicPolygon& polygon, const Tolerances& tol) {
  const auto inv = cyclic_invariants(polygon, tol);
  return std::abs(inv.bifurcation_sum) < tol.bifurcation * inv.tan_sum;
}

namespace {

// Oriented area on the fixed-length space in the edge-angle chart:
//   A(theta) = 1/2 sum_{i<j} l_i l_j sin(theta_j - theta_i)
// subject to sum l_i (cos theta_i, sin theta_i) = 0, with theta_0 frozen.
// All vectors and matrices below are over the free angles theta_1..theta_{n-1}.
struct LengthChart {
  std::vector<double> l;
  std::vector<double> theta;

  Eigen::Index free_size() const { return static_cast<Eigen::Index>(l.size()) - 1; }

  Eigen::VectorXd area_gradient() const {
    const std::size_t n = l.size();
    Eigen::VectorXd g(free_size());
    for (std::size_t k = 1; k < n; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i) s += l[i] * std::cos(theta[k] - theta[i]);
      for (std::size_t j = k + 1; j < n; ++j) s -= l[j] * std::cos(theta[j] - theta[k]);
      g(static_cast<Eigen::Index>(k - 1)) = 0.5 * l[k] * s;
    }
    return g;
  }

  Eigen::MatrixXd area_hessian() const {
    const std::size_t n = l.size();
    Eigen::MatrixXd h(free_size(), free_size());
    for (std::size_t a = 1; a < n; ++a) {
      double diag = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == a) continue;
        const std::size_t lo = std::min(i, a);
        const std::size_t hi = std::max(i, a);
        diag += l[i] * std::sin(theta[hi] - theta[lo]);
      }
      h(static_cast<Eigen::Index>(a - 1), static_cast<Eigen::Index>(a - 1)) = -0.5 * l[a] * diag;
      for (std::size_t b = a + 1; b < n; ++b) {
        const double v = 0.5 * l[a] * l[b] * std::sin(theta[b] - theta[a]);
        h(static_cast<Eigen::Index>(a - 1), static_cast<Eigen::Index>(b - 1)) = v;
        h(static_cast<Eigen::Index>(b - 1), static_cast<Eigen::Index>(a - 1)) = v;
      }
    }
    return h;
  }

  // Rows: d/dtheta of sum l cos(theta), sum l sin(theta).
  Eigen::MatrixXd constraint_jacobian() const {
    Eigen::MatrixXd j(2, free_size());
    for (std::size_t k = 1; k < l.size(); ++k) {
      const auto c = static_cast<Eigen::Index>(k - 1);
      j(0, c) = -l[k] * std::sin(theta[k]);
      j(1, c) = l[k] * std::cos(theta[k]);
    }
    return j;
  }

  Eigen::Vector2d multipliers() const {
    const Eigen::MatrixXd j = constraint_jacobian();
    return j.transpose().colPivHouseholderQr().solve(area_gradient());
  }

  double residual() const {
    const Eigen::MatrixXd j = constraint_jacobian();
    return (area_gradient() - j.transpose() * multipliers()).norm();
  }

  double length_scale() const {
    double s = 0.0;
    for (double v : l) s += v * v;
    return s;
  }
};

LengthChart chart_of(const PolygonChain& polygon) {
  LengthChart c;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Vec2 e = polygon.edge(static_cast<std::ptrdiff_t>(i));
    c.l.push_back(norm(e));
    c.theta.push_back(std::atan2(e.y, e.x));
  }
  return c;
}

}  // namespace

double area_criticality_residual(const PolygonChain& polygon, std::span<const double> lengths,
                                 const Tolerances& tol) {
  if (lengths.size() != polygon.size()) {
    throw GeometryError(ErrorCode::LengthMismatch, "one length per edge is required");
  }
  LengthChart c = chart_of(polygon);
  const double scale = polygon.diameter();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (std::abs(c.l[i] - lengths[i]) > tol.length * scale) {
      std::ostringstream os;
      os << "edge " << i << " has length " << c.l[i] << ", expected " << lengths[i];
      throw GeometryError(ErrorCode::LengthMismatch, os.str());
    }
  }
  return c.residual();
}

AreaIndexReport area_morse_index_report(const CyclicPolygon& polygon, const Tolerances& tol) {
  const LengthChart c = chart_of(polygon.polygon(tol));
  AreaIndexReport rep;
  rep.residual = c.residual();
  if (rep.residual > tol.criticality * c.length_scale()) {
    std::ostringstream os;
    os << "projected area gradient " << rep.residual << " at a cyclic polygon";
    throw GeometryError(ErrorCode::NotCritical, os.str());
  }

  const Eigen::Vector2d lambda = c.multipliers();
  Eigen::MatrixXd lagrangian = c.area_hessian();
  for (std::size_t k = 1; k < c.l.size(); ++k) {
    const auto d = static_cast<Eigen::Index>(k - 1);
    // Hessians of the two constraint components are diagonal.
    lagrangian(d, d) -= lambda(0) * (-c.l[k] * std::cos(c.theta[k])) +
                        lambda(1) * (-c.l[k] * std::sin(c.theta[k]));
  }

  const Eigen::Index m = c.free_size();
  const Eigen::Index dim = m - 2;
  if (dim <= 0) return rep;
  const Eigen::MatrixXd jt = c.constraint_jacobian().transpose();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(jt);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
  const Eigen::MatrixXd basis = q.rightCols(dim);
  const Eigen::MatrixXd projected = basis.transpose() * lagrangian * basis;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(projected, Eigen::EigenvaluesOnly);
  // n = 4 projects to a single entry, which vanishes at a bifurcation
  const double band =
      tol.area_band * std::max(projected.cwiseAbs().maxCoeff(), lagrangian.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double ev = solver.eigenvalues()(i);
    rep.eigenvalues.push_back(ev);
    if (ev < 0.0) ++rep.index;
  }
  for (double ev : rep.eigenvalues) {
    if (std::abs(ev) <= band) {
      std::ostringstream os;
      os << "area Hessian eigenvalue " << ev << " inside dead band " << band;
      throw GeometryError(ErrorCode::DegenerateCritical, os.str());
    }
  }
  return rep;
}

int area_morse_index_numeric(const CyclicPolygon& polygon, const Tolerances& tol) {
  return area_morse_index_report(polygon, tol).index;
}

int area_morse_index_formula(const CyclicPolygon& polygon, const Tolerances& tol) {
  const auto inv = cyclic_invariants(polygon, tol);
  if (std::abs(inv.bifurcation_sum) < tol.bifurcation * inv.tan_sum) {
    throw GeometryError(ErrorCode::Bifurcating, "sum eps_i tan(alpha_i) vanishes");
  }
  return inv.e - 1 - 2 * inv.omega - (inv.bifurcation_sum > 0.0 ? 0 : 1);
}

DualityReport duality_index_check(const CyclicPolygon& polygon, const Tolerances& tol) {
  const auto inv = cyclic_invariants(polygon, tol);
  const int n = static_cast<int>(polygon.size());
  DualityReport rep{inv.bifurcation_sum, dual_polygon(polygon, tol), {}, {}, {}};
  rep.mu_area_formula = area_morse_index_formula(polygon, tol);
  rep.mu_area_numeric = area_morse_index_numeric(polygon, tol);

  std::vector<double> offsets;
  for (const auto& d : rep.dual.directions) {
    offsets.push_back(DirectedLine::tangent_to(d, rep.dual.incenter, rep.dual.inradius).offset);
  }
  rep.dual_offsets = perimeter_index_offsets(rep.dual.directions, offsets, tol);
  rep.mu_dual_perimeter = rep.dual_offsets.index;

  std::optional<SlopeSystem> system;
  try {
    system.emplace(rep.dual.directions, tol);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::ParallelLines) throw;
  }
  bool routes_agree = true;
  if (system) {
    const CriticalPoints points = tangential_critical_points(*system, tol);
    const auto* pair = std::get_if<CriticalPair>(&points);
    if (pair == nullptr) {
      throw GeometryError(ErrorCode::Bifurcating, "the dual slope system is exceptional");
    }
    // P* has inradius +R, so its rescaling to unit area is the r > 0 point.
    rep.dual_critical = pair->positive;
    rep.dual_index = morse_index_eigen(*rep.dual_critical, tol);
    rep.mu_dual_perimeter = rep.dual_index->mu_eigen;
    routes_agree = rep.dual_index->mu_eigen == rep.dual_offsets.index;
  }
  rep.identity_holds = routes_agree && rep.mu_area_numeric == rep.mu_area_formula &&
                       rep.mu_area_formula == n - 3 - rep.mu_dual_perimeter;
  return rep;
}

}  // namespace slopepoly
