#include "slopepoly/lines.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "slopepoly/errors.hpp"

namespace slopepoly {

Vec2 intersect(const DirectedLine& a, const DirectedLine& b, const Tolerances& tol) {
  const Vec2 na = a.slope.left_normal();
  const Vec2 nb = b.slope.left_normal();
  const double det = cross(na, nb);
  if (!(std::abs(det) * tol.max_condition > 1.0)) {
    throw GeometryError(ErrorCode::ReconstructionDegenerate, "line intersection is ill-conditioned");
  }
  // Cramer's rule on [na; nb] v = [a.offset; b.offset]
  return {(a.offset * nb.y - na.y * b.offset) / det, (na.x * b.offset - a.offset * nb.x) / det};
}

std::array<TritangentCircle, 4> tritangent_circles(const std::array<DirectedLine, 3>& lines,
                                                   const Tolerances& tol) {
  static constexpr std::array<std::array<double, 3>, 4> kPatterns{{
      {1.0, 1.0, 1.0},
      {-1.0, 1.0, 1.0},
      {1.0, -1.0, 1.0},
      {1.0, 1.0, -1.0},
  }};

  double scale = 0.0;
  for (const auto& l : lines) scale = std::max(scale, std::abs(l.offset));

  std::array<TritangentCircle, 4> out;
  for (std::size_t c = 0; c < kPatterns.size(); ++c) {
    // signed_distance_j(center) = pattern_j * rho
    Eigen::Matrix3d m;
    Eigen::Vector3d rhs;
    for (int j = 0; j < 3; ++j) {
      const Vec2 n = lines[static_cast<std::size_t>(j)].slope.left_normal();
      m(j, 0) = n.x;
      m(j, 1) = n.y;
      m(j, 2) = -kPatterns[c][static_cast<std::size_t>(j)];
      rhs(j) = lines[static_cast<std::size_t>(j)].offset;
    }
    Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
    if (!lu.isInvertible()) {
      throw GeometryError(ErrorCode::ParallelLines, "tritangent system is singular");
    }
    const Eigen::Vector3d sol = lu.solve(rhs);
    TritangentCircle& t = out[c];
    t.circle.center = {sol(0), sol(1)};
    t.circle.radius = std::abs(sol(2));
    const double band = tol.degenerate * std::max(scale, norm(t.circle.center));
    for (std::size_t j = 0; j < 3; ++j) {
      const double d = lines[j].signed_distance(t.circle.center);
      t.sides[j] = d > band ? 1 : (d < -band ? -1 : 0);
    }
  }
  return out;
}

InscribedCircle inscribed_circle(const std::array<DirectedLine, 3>& lines, const Tolerances& tol) {
  const auto candidates = tritangent_circles(lines, tol);
  const TritangentCircle* chosen = nullptr;
  int matches = 0;
  bool all_zero = true;
  for (const auto& c : candidates) {
    const auto& s = c.sides;
    if (s[0] != 0 || s[1] != 0 || s[2] != 0) all_zero = false;
    if (s[0] != 0 && s[0] == s[1] && s[1] == s[2]) {
      chosen = &c;
      ++matches;
    }
  }
  if (matches == 1) {
    return {chosen->circle.center, chosen->sides[0] * chosen->circle.radius};
  }
  if (matches == 0 && all_zero) {
    // three concurrent lines; every candidate collapsed to the common point
    return {candidates[0].circle.center, 0.0};
  }
  throw GeometryError(ErrorCode::ReconstructionDegenerate,
                      "no unique same-side tritangent circle for three lines");
}

}  // namespace slopepoly
