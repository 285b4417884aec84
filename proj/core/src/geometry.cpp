#include "slopepoly/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "slopepoly/errors.hpp"

namespace slopepoly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::PointOnBoundary: return "PointOnBoundary";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::NonIntegralTurn: return "NonIntegralTurn";
    case ErrorCode::SlopeMismatch: return "SlopeMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::ReconstructionDegenerate: return "ReconstructionDegenerate";
    case ErrorCode::DegenerateHessian: return "DegenerateHessian";
    case ErrorCode::InconsistentMinors: return "InconsistentMinors";
    case ErrorCode::CoincidentVertices: return "CoincidentVertices";
    case ErrorCode::AntipodalVertices: return "AntipodalVertices";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::DegenerateCritical: return "DegenerateCritical";
    case ErrorCode::Bifurcating: return "Bifurcating";
    case ErrorCode::Exceptional: return "Exceptional";
  }
  return "Unknown";
}

bool GeometryError::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::InvalidInput:
    case ErrorCode::DegeneratePolygon:
    case ErrorCode::PointOnBoundary:
    case ErrorCode::ParallelLines:
    case ErrorCode::SlopeMismatch:
    case ErrorCode::CoincidentVertices:
    case ErrorCode::AntipodalVertices:
    case ErrorCode::LengthMismatch:
    case ErrorCode::Bifurcating:
    case ErrorCode::Exceptional:
      return true;
    default:
      return false;
  }
}

double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2*pi
  if (a >= kTwoPi) a = 0.0;
  return a;
}

namespace {

// Angle between two lines modulo pi, in [0, pi).
double line_difference(const DirectedSlope& r, const DirectedSlope& s) {
  double d = std::fmod(s.angle() - r.angle(), kPi);
  if (d < 0.0) d += kPi;
  if (d >= kPi) d = 0.0;
  return d;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + ab * t);
}

}  // namespace

// --- SlopeSystem ------------------------------------------------------------

SlopeSystem::SlopeSystem(std::vector<DirectedSlope> slopes, const Tolerances& tol)
    : slopes_(std::move(slopes)) {
  if (slopes_.size() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "a slope system needs at least 3 slopes");
  }
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    if (!std::isfinite(slopes_[i].angle())) {
      throw GeometryError(ErrorCode::InvalidInput, "slope angle is not finite");
    }
    for (std::size_t j = i + 1; j < slopes_.size(); ++j) {
      const double d = line_difference(slopes_[i], slopes_[j]);
      if (d < tol.parallel || kPi - d < tol.parallel) {
        std::ostringstream os;
        os << "slopes " << i << " and " << j << " are parallel";
        throw GeometryError(ErrorCode::ParallelLines, os.str());
      }
    }
  }
}

SlopeSystem SlopeSystem::from_degrees(std::span<const double> degrees, const Tolerances& tol) {
  std::vector<DirectedSlope> s;
  s.reserve(degrees.size());
  for (double d : degrees) s.push_back(DirectedSlope::from_degrees(d));
  return SlopeSystem(std::move(s), tol);
}

SlopeSystem SlopeSystem::from_radians(std::span<const double> radians, const Tolerances& tol) {
  std::vector<DirectedSlope> s;
  s.reserve(radians.size());
  for (double a : radians) s.push_back(DirectedSlope::from_radians(a));
  return SlopeSystem(std::move(s), tol);
}

const DirectedSlope& SlopeSystem::at_cyclic(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(slopes_.size());
  return slopes_[static_cast<std::size_t>(((i % n) + n) % n)];
}

SlopeSystem SlopeSystem::rotated(std::size_t shift) const {
  std::vector<DirectedSlope> s(slopes_);
  std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(shift % s.size()), s.end());
  SlopeSystem out = *this;
  out.slopes_ = std::move(s);
  return out;
}

SlopeSystem SlopeSystem::reversed_directions() const {
  SlopeSystem out = *this;
  for (auto& s : out.slopes_) s = s.reversed();
  return out;
}

// --- PolygonChain -----------------------------------------------------------

PolygonChain::PolygonChain(std::vector<Vec2> vertices, const Tolerances& tol)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "a polygon needs at least 3 vertices");
  }
  for (const Vec2& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw GeometryError(ErrorCode::InvalidInput, "vertex coordinate is not finite");
    }
  }
  const double threshold = tol.degenerate * diameter();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % vertices_.size()];
    if (distance(a, b) <= threshold) {
      std::ostringstream os;
      os << "vertices " << i << " and " << (i + 1) % vertices_.size() << " coincide";
      throw GeometryError(ErrorCode::DegeneratePolygon, os.str());
    }
  }
}

const Vec2& PolygonChain::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

double PolygonChain::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      d = std::max(d, distance(vertices_[i], vertices_[j]));
    }
  }
  return d;
}

PolygonChain PolygonChain::reversed() const {
  PolygonChain out = *this;
  std::reverse(out.vertices_.begin(), out.vertices_.end());
  return out;
}

PolygonChain PolygonChain::translated(Vec2 offset) const {
  PolygonChain out = *this;
  for (auto& v : out.vertices_) v += offset;
  return out;
}

PolygonChain PolygonChain::scaled(double factor) const {
  if (factor == 0.0 || !std::isfinite(factor)) {
    throw GeometryError(ErrorCode::InvalidInput, "scale factor must be finite and nonzero");
  }
  PolygonChain out = *this;
  for (auto& v : out.vertices_) v = v * factor;
  return out;
}

// --- measurements -----------------------------------------------------------

double oriented_area(std::span<const Vec2> vertices) {
  const std::size_t n = vertices.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % n]);
  }
  return 0.5 * twice;
}

double oriented_area(const PolygonChain& polygon) { return oriented_area(polygon.vertices()); }

int winding_number(const PolygonChain& polygon, Vec2 x, const Tolerances& tol) {
  const double on_edge = tol.on_boundary * polygon.diameter();
  const auto n = static_cast<std::ptrdiff_t>(polygon.size());
  double total = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Vec2 a = polygon.vertex(i);
    const Vec2 b = polygon.vertex(i + 1);
    if (point_segment_distance(x, a, b) <= on_edge) {
      std::ostringstream os;
      os << "point lies on edge " << i;
      throw GeometryError(ErrorCode::PointOnBoundary, os.str());
    }
    const Vec2 u = a - x;
    const Vec2 w = b - x;
    total += std::atan2(cross(u, w), dot(u, w));
  }
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= tol.winding_residual) {
    throw GeometryError(ErrorCode::PointOnBoundary, "winding sum is not integral");
  }
  return static_cast<int>(rounded);
}

double line_angle(const DirectedSlope& r, const DirectedSlope& s, const Tolerances& tol) {
  const double d = line_difference(r, s);
  if (d < tol.parallel || kPi - d < tol.parallel) {
    throw GeometryError(ErrorCode::ParallelLines, "line angle of parallel lines is undefined");
  }
  return d;
}

TurningSum turning_sum(const SlopeSystem& system, const Tolerances& tol) {
  const auto n = static_cast<std::ptrdiff_t>(system.size());
  double t = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    t += line_angle(system.at_cyclic(i), system.at_cyclic(i + 1), tol);
  }
  const double ratio = t / kPi;
  const double k = std::round(ratio);
  if (std::abs(ratio - k) > tol.integrality * std::max(1.0, k) || k < 1.0 ||
      k > static_cast<double>(n - 1)) {
    std::ostringstream os;
    os << "turning sum / pi = " << ratio;
    throw GeometryError(ErrorCode::NonIntegralTurn, os.str());
  }
  return {t, static_cast<int>(k)};
}

TurnCounts turn_counts(const SlopeSystem& system) { return turn_counts(system.slopes()); }

TurnCounts turn_counts(std::span<const DirectedSlope> directions, const Tolerances& tol) {
  const std::size_t n = directions.size();
  TurnCounts counts;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = wrap_two_pi(directions[(i + 1) % n].angle() - directions[i].angle());
    if (d < tol.parallel || kTwoPi - d < tol.parallel || std::abs(d - kPi) < tol.parallel) {
      throw GeometryError(ErrorCode::ParallelLines, "consecutive directions are parallel");
    }
    if (d < kPi) {
      ++counts.left;
    } else {
      ++counts.right;
    }
  }
  return counts;
}

double signed_perimeter(const PolygonChain& polygon, std::span<const DirectedSlope> directions,
                        const Tolerances& tol) {
  if (directions.size() != polygon.size()) {
    throw GeometryError(ErrorCode::InvalidInput, "one direction per edge is required");
  }
  const auto n = static_cast<std::ptrdiff_t>(polygon.size());
  double sum = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Vec2 e = polygon.edge(i);
    const double len = norm(e);
    const Vec2 d = directions[static_cast<std::size_t>(i)].direction();
    if (std::abs(cross(e, d)) > tol.parallel * len) {
      std::ostringstream os;
      os << "edge " << i << " is not parallel to its slope";
      throw GeometryError(ErrorCode::SlopeMismatch, os.str());
    }
    sum += dot(e, d) > 0.0 ? len : -len;
  }
  return sum;
}

double signed_perimeter(const PolygonChain& polygon, const SlopeSystem& system,
                        const Tolerances& tol) {
  return signed_perimeter(polygon, system.slopes(), tol);
}

}  // namespace slopepoly
