#include "slopepoly/tangential_morse.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <sstream>

#include "slopepoly/errors.hpp"

namespace slopepoly {

namespace {

TangentialCritical make_critical(const RadiiChart& chart, double r, const Tolerances& tol) {
  RadiiPoint pt{std::vector<double>(chart.dimension(), r)};
  PolygonChain polygon = polygon_from_radii(chart, pt, tol);
  const Vec2 incenter = chart.system[0].left_normal() * r;
  const double perimeter = signed_perimeter(polygon, chart.system, tol);
  const double area = oriented_area(polygon);
  const int omega = winding_number(polygon, incenter, tol);

  TangentialCritical t{std::move(polygon), chart, r, incenter, perimeter, area, omega,
                       turn_counts(chart.system), {}, 0.0};
  t.hessian = perimeter_hessian(chart.p, r);

  if (chart.dimension() > 1) {
    const double area_sign = chart.pi_sum > 0.0 ? 1.0 : -1.0;
    ConstrainedPerimeter f(chart, area_sign, r > 0.0 ? 1.0 : -1.0,
                           ConstrainedPerimeter::best_dependent(chart));
    const std::vector<double> free(chart.dimension() - 1, r);
    const auto g = f.gradient(free, 1e-5 * std::abs(r));
    double s = 0.0;
    for (double v : g) s += v * v;
    t.gradient_norm = std::sqrt(s);
  }
  return t;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

CriticalPoints tangential_critical_points(const SlopeSystem& system, const Tolerances& tol) {
  return tangential_critical_points(build_chart(system, tol), tol);
}

CriticalPoints tangential_critical_points(const RadiiChart& chart, const Tolerances& tol) {
  const double total = chart.abs_p_sum();
  if (std::abs(chart.pi_sum) <= tol.exceptional * total) {
    return ExceptionalSpace{chart.pi_sum, total};
  }
  // 1/2 * Pi * r^2 = +-1
  const double r = std::sqrt(2.0 / std::abs(chart.pi_sum));
  return CriticalPair{make_critical(chart, r, tol), make_critical(chart, -r, tol)};
}

Eigen::MatrixXd perimeter_hessian(std::span<const double> p, double r) {
  return perimeter_hessian(p, r, 0);
}

Eigen::MatrixXd perimeter_hessian(std::span<const double> p, double r, std::size_t dependent) {
  if (p.empty()) return {};
  if (dependent >= p.size()) {
    throw GeometryError(ErrorCode::InvalidInput, "dependent radius out of range");
  }
  std::vector<double> q;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != dependent) q.push_back(p[i]);
  }
  const double pd = p[dependent];
  const auto m = static_cast<Eigen::Index>(q.size());
  Eigen::MatrixXd h(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double pj = q[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < m; ++k) {
      const double pk = q[static_cast<std::size_t>(k)];
      h(j, k) = j == k ? -(pj / (r * pd)) * (pd + pj) : -(pj * pk) / (r * pd);
    }
  }
  return h;
}

Eigen::MatrixXd perimeter_hessian(const TangentialCritical& point) {
  return perimeter_hessian(point.chart.p, point.r);
}

double DeterminantIdentity::relative_error() const {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

DeterminantIdentity hessian_det_identity(const TangentialCritical& point) {
  const auto& p = point.chart.p;
  if (point.size() < 4) {
    throw GeometryError(ErrorCode::InvalidInput, "determinant identity needs n >= 4");
  }
  const Eigen::MatrixXd& h = point.hessian;
  DeterminantIdentity out;
  out.lhs = std::pow(point.r, static_cast<double>(h.rows())) * h.partialPivLu().determinant();
  double rhs = -p[1] * point.chart.pi_sum / p[0];
  for (std::size_t i = 2; i < p.size(); ++i) rhs *= -p[i];
  out.rhs = rhs;
  return out;
}

IndexReport morse_index_eigen(const TangentialCritical& point, const Tolerances& tol) {
  IndexReport rep;
  rep.mu_formula = morse_index_formula(point);
  rep.dependent = point.chart.p.empty() ? 0 : ConstrainedPerimeter::best_dependent(point.chart);
  const Eigen::MatrixXd h = perimeter_hessian(point.chart.p, point.r, rep.dependent);
  const Eigen::Index m = h.rows();
  if (m > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    const double band = tol.eigen_band * h.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double ev = solver.eigenvalues()(i);
      rep.eigenvalues.push_back(ev);
      if (std::abs(ev) <= band) {
        std::ostringstream os;
        os << "eigenvalue " << ev << " inside dead band " << band;
        throw GeometryError(ErrorCode::DegenerateHessian, os.str());
      }
      if (ev < 0.0) ++rep.mu_eigen;
    }

    // Leading principal minors; a minor below its Hadamard bound times
    // roundoff carries no reliable sign.
    bool ambiguous = false;
    int previous = 1;
    for (Eigen::Index k = 1; k <= m; ++k) {
      const auto block = h.topLeftCorner(k, k);
      const double det = Eigen::MatrixXd(block).partialPivLu().determinant();
      double bound = 1.0;
      for (Eigen::Index i = 0; i < k; ++i) bound *= block.row(i).norm();
      const int s = std::abs(det) <= 1e-12 * bound ? 0 : sign_of(det);
      rep.minor_signs.push_back(s);
      if (s == 0) {
        ambiguous = true;
        continue;
      }
      if (s != previous) ++rep.minor_sign_changes;
      previous = s;
    }
    if (!ambiguous && rep.minor_sign_changes != rep.mu_eigen) {
      std::ostringstream os;
      os << "minor sign changes " << rep.minor_sign_changes << " != negative eigenvalues "
         << rep.mu_eigen;
      throw GeometryError(ErrorCode::InconsistentMinors, os.str());
    }
  }
  rep.agreement = rep.mu_eigen == rep.mu_formula;
  return rep;
}

int morse_index_formula(const TangentialCritical& point) {
  const int positive_perimeter = point.perimeter > 0.0 ? 1 : 0;
  if (point.r > 0.0) {
    return point.turns.right - 1 + 2 * point.omega - positive_perimeter;
  }
  return point.turns.left - 1 - 2 * point.omega - positive_perimeter;
}

OffsetIndexReport perimeter_index_offsets(std::span<const DirectedSlope> directions,
                                          std::span<const double> offsets, const Tolerances& tol) {
  const std::size_t n = directions.size();
  if (n < 3 || offsets.size() != n) {
    throw GeometryError(ErrorCode::InvalidInput, "need one offset per direction, n >= 3");
  }
  const auto dim = static_cast<Eigen::Index>(n);
  const Eigen::Matrix2d rot{{0.0, 1.0}, {-1.0, 0.0}};  // a^T rot b = cross(a, b)

  // vertex j = G_j h, the intersection of lines j-1 and j
  std::vector<Eigen::MatrixXd> g(n, Eigen::MatrixXd::Zero(2, dim));
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t prev = (j + n - 1) % n;
    const Vec2 a = directions[prev].left_normal();
    const Vec2 b = directions[j].left_normal();
    const double det = cross(a, b);
    if (std::abs(det) < tol.parallel) {
      throw GeometryError(ErrorCode::ParallelLines, "consecutive edge lines are parallel");
    }
    g[j](0, static_cast<Eigen::Index>(prev)) = b.y / det;
    g[j](1, static_cast<Eigen::Index>(prev)) = -b.x / det;
    g[j](0, static_cast<Eigen::Index>(j)) = -a.y / det;
    g[j](1, static_cast<Eigen::Index>(j)) = a.x / det;
  }

  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(dim);
  for (std::size_t j = 0; j < n; ++j) {
    const Eigen::MatrixXd& next = g[(j + 1) % n];
    const Eigen::MatrixXd s = g[j].transpose() * rot * next;
    q += 0.5 * (s + s.transpose());
    const Vec2 d = directions[j].direction();
    grad += (Eigen::RowVector2d(d.x, d.y) * (next - g[j])).transpose();
  }

  const Eigen::Map<const Eigen::VectorXd> h(offsets.data(), dim);
  const Eigen::VectorXd qh = q * h;
  if (qh.norm() <= tol.degenerate * q.norm() * h.norm()) {
    throw GeometryError(ErrorCode::DegeneratePolygon, "tangential polygon has zero area");
  }
  OffsetIndexReport rep;
  rep.multiplier = grad.dot(qh) / qh.squaredNorm();
  rep.residual = (grad - rep.multiplier * qh).norm() / grad.norm();
  if (rep.residual > tol.criticality) {
    std::ostringstream os;
    os << "perimeter gradient not proportional to area gradient (residual " << rep.residual << ")";
    throw GeometryError(ErrorCode::NotCritical, os.str());
  }

  // tangent space: orthogonal to the translations and to grad A
  Eigen::MatrixXd normal(dim, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 nv = directions[i].left_normal();
    normal(static_cast<Eigen::Index>(i), 0) = nv.x;
    normal(static_cast<Eigen::Index>(i), 1) = nv.y;
  }
  normal.col(2) = qh;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(normal);
  const Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd basis = full.rightCols(dim - 3);
  const Eigen::MatrixXd projected = -rep.multiplier * (basis.transpose() * q * basis);
  if (projected.size() == 0) return rep;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(projected, Eigen::EigenvaluesOnly);
  const double band = tol.eigen_band * projected.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < projected.rows(); ++i) {
    const double ev = solver.eigenvalues()(i);
    rep.eigenvalues.push_back(ev);
    if (std::abs(ev) <= band) {
      std::ostringstream os;
      os << "eigenvalue " << ev << " inside dead band " << band;
      throw GeometryError(ErrorCode::DegenerateHessian, os.str());
    }
    if (ev < 0.0) ++rep.index;
  }
  return rep;
}

ConstrainedPerimeter::ConstrainedPerimeter(const RadiiChart& chart, double area_sign,
                                           double branch_sign, std::size_t dependent)
    : p_(chart.p), area_sign_(area_sign), branch_sign_(branch_sign), dependent_(dependent) {
  if (dependent_ >= p_.size()) {
    throw GeometryError(ErrorCode::InvalidInput, "dependent radius index out of range");
  }
}

std::size_t ConstrainedPerimeter::best_dependent(const RadiiChart& chart) {
  const auto it = std::max_element(chart.p.begin(), chart.p.end(),
                                   [](double a, double b) { return std::abs(a) < std::abs(b); });
  return static_cast<std::size_t>(it - chart.p.begin());
}

std::optional<double> ConstrainedPerimeter::solve_dependent(std::span<const double> free) const {
  // p_d r_d^2 = 2 * area_sign - sum_{i != d} p_i r_i^2
  double rest = 0.0;
  std::size_t f = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i == dependent_) continue;
    rest += p_[i] * free[f] * free[f];
    ++f;
  }
  const double sq = (2.0 * area_sign_ - rest) / p_[dependent_];
  if (!(sq > 0.0)) return std::nullopt;
  return branch_sign_ * std::sqrt(sq);
}

std::optional<double> ConstrainedPerimeter::perimeter(std::span<const double> free) const {
  const auto rd = solve_dependent(free);
  if (!rd) return std::nullopt;
  double s = p_[dependent_] * *rd;
  std::size_t f = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i == dependent_) continue;
    s += p_[i] * free[f];
    ++f;
  }
  return s;
}

std::vector<double> ConstrainedPerimeter::gradient(std::span<const double> free, double step) const {
  std::vector<double> x(free.begin(), free.end());
  std::vector<double> g(x.size(), 0.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double saved = x[j];
    x[j] = saved + step;
    const auto fp = perimeter(x);
    x[j] = saved - step;
    const auto fm = perimeter(x);
    x[j] = saved;
    if (!fp || !fm) {
      throw GeometryError(ErrorCode::ReconstructionDegenerate,
                          "finite-difference step left the area level set");
    }
    g[j] = (*fp - *fm) / (2.0 * step);
  }
  return g;
}

}  // namespace slopepoly
