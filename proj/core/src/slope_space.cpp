#include "slopepoly/slope_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "slopepoly/errors.hpp"

namespace slopepoly {

namespace {

std::vector<Vec2> vertices_of(const std::vector<DirectedLine>& lines, const Tolerances& tol) {
  const std::size_t n = lines.size();
  std::vector<Vec2> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = intersect(lines[(j + n - 1) % n], lines[j], tol);
  }
  return v;
}

PolygonChain make_polygon(std::vector<Vec2> vertices, const Tolerances& tol) {
  try {
    return PolygonChain(std::move(vertices), tol);
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorCode::ReconstructionDegenerate, e.what());
  }
}

}  // namespace

UnitTriangle unit_triangle(const DirectedSlope& a, const DirectedSlope& b, const DirectedSlope& c,
                           const Tolerances& tol) {
  (void)line_angle(a, b, tol);
  (void)line_angle(b, c, tol);
  (void)line_angle(c, a, tol);
  const std::vector<DirectedLine> lines{
      DirectedLine::tangent_to(a, {}, 1.0),
      DirectedLine::tangent_to(b, {}, 1.0),
      DirectedLine::tangent_to(c, {}, 1.0),
  };
  PolygonChain tri(vertices_of(lines, tol), tol);
  const double p = 2.0 * oriented_area(tri);
  return {std::move(tri), p};
}

double RadiiChart::abs_p_sum() const {
  double s = 0.0;
  for (double v : p) s += std::abs(v);
  return s;
}

double RadiiChart::area(const RadiiPoint& pt) const {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * pt.r[i] * pt.r[i];
  return 0.5 * s;
}

double RadiiChart::perimeter(const RadiiPoint& pt) const {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * pt.r[i];
  return s;
}

RadiiChart build_chart(const SlopeSystem& system, const Tolerances& tol) {
  const std::size_t n = system.size();
  RadiiChart chart{system, {}, {}, 0.0, 0, 0};
  chart.p.reserve(n - 2);
  chart.c.reserve(n - 2);
  const DirectedLine e0 = DirectedLine::tangent_to(system[0], {}, 1.0);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const UnitTriangle u = unit_triangle(system[0], system[i + 1], system[i + 2], tol);
    const Vec2 apex = u.triangle[2];
    const double h = e0.signed_distance(apex);
    chart.p.push_back(u.perimeter);
    chart.c.push_back(0.5 * std::abs(u.perimeter) / (h * h));
  }
  chart.pi_sum = std::accumulate(chart.p.begin(), chart.p.end(), 0.0);
  chart.k = turning_sum(system, tol).k;
  chart.positive_count =
      static_cast<int>(std::count_if(chart.p.begin(), chart.p.end(), [](double v) { return v > 0.0; }));
  if (chart.positive_count != chart.k - 1) {
    std::ostringstream os;
    os << "#{p_i > 0} = " << chart.positive_count << " but turning number is " << chart.k;
    throw GeometryError(ErrorCode::SignatureMismatch, os.str());
  }
  return chart;
}

PolygonChain polygon_from_radii(const RadiiChart& chart, const RadiiPoint& pt,
                                const Tolerances& tol) {
  const std::size_t n = chart.size();
  if (pt.r.size() != chart.dimension()) {
    throw GeometryError(ErrorCode::InvalidInput, "radii point has the wrong dimension");
  }
  const SlopeSystem& s = chart.system;
  std::vector<DirectedLine> lines(n);
  lines[0] = DirectedLine{s[0], 0.0};

  // First triangle: center on the normal of e_0 through the origin.
  Vec2 center = s[0].left_normal() * pt.r[0];
  lines[1] = DirectedLine::tangent_to(s[1], center, pt.r[0]);
  lines[2] = DirectedLine::tangent_to(s[2], center, pt.r[0]);

  for (std::size_t i = 1; i + 2 < n; ++i) {
    const double r = pt.r[i];
    // The center sits at signed distance r from both e_0 and e_{i+1}.
    center = intersect(DirectedLine{s[0], lines[0].offset + r},
                       DirectedLine{s[i + 1], lines[i + 1].offset + r}, tol);
    lines[i + 2] = DirectedLine::tangent_to(s[i + 2], center, r);
  }
  return make_polygon(vertices_of(lines, tol), tol);
}

std::vector<DirectedLine> edge_lines(const SlopeSystem& system, const PolygonChain& polygon,
                                     const Tolerances& tol) {
  if (polygon.size() != system.size()) {
    throw GeometryError(ErrorCode::SlopeMismatch, "polygon and slope system sizes differ");
  }
  std::vector<DirectedLine> lines;
  lines.reserve(system.size());
  for (std::size_t j = 0; j < system.size(); ++j) {
    const Vec2 e = polygon.edge(static_cast<std::ptrdiff_t>(j));
    if (std::abs(cross(e, system[j].direction())) > tol.parallel * norm(e)) {
      std::ostringstream os;
      os << "edge " << j << " is not parallel to its slope";
      throw GeometryError(ErrorCode::SlopeMismatch, os.str());
    }
    // Average both endpoints so the line is symmetric in the edge.
    const Vec2 mid = (polygon[j] + polygon.vertex(static_cast<std::ptrdiff_t>(j) + 1)) * 0.5;
    lines.push_back(DirectedLine::through(system[j], mid));
  }
  return lines;
}

PolygonChain decomposition_triangle(const std::vector<DirectedLine>& lines, std::size_t i,
                                    const Tolerances& tol) {
  const std::vector<DirectedLine> tri{lines[0], lines[i + 1], lines[i + 2]};
  return PolygonChain(vertices_of(tri, tol), tol);
}

RadiiPoint radii_of_polygon(const RadiiChart& chart, const PolygonChain& polygon,
                            const Tolerances& tol) {
  const auto lines = edge_lines(chart.system, polygon, tol);
  RadiiPoint pt;
  pt.r.reserve(chart.dimension());
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    pt.r.push_back(inscribed_circle({lines[0], lines[i + 1], lines[i + 2]}, tol).signed_radius);
  }
  return pt;
}

NormalizedCoordinates normalized_coordinates(const RadiiChart& chart, const PolygonChain& polygon,
                                             const Tolerances& tol) {
  const auto lines = edge_lines(chart.system, polygon, tol);
  NormalizedCoordinates out;
  out.x.reserve(chart.dimension());
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    const Vec2 apex = intersect(lines[i + 1], lines[i + 2], tol);
    const double xi = std::sqrt(chart.c[i]) * lines[0].signed_distance(apex);
    out.x.push_back(xi);
    (chart.p[i] > 0.0 ? out.positive_sum : out.negative_sum) += xi * xi;
  }
  if (oriented_area(polygon) > 0.0 && out.positive_sum > 0.0) {
    const double scale = 1.0 / std::sqrt(out.positive_sum);
    std::vector<double> h(out.x);
    for (double& v : h) v *= scale;
    out.normalized = std::move(h);
  }
  return out;
}

std::string ComponentTopology::to_string() const {
  if (empty()) return "empty";
  std::ostringstream os;
  os << "S^" << sphere_dim << " x D^" << disc_dim;
  return os.str();
}

TopologyReport topology_report(const SlopeSystem& system, const Tolerances& tol) {
  const int n = static_cast<int>(system.size());
  const int k = turning_sum(system, tol).k;
  TopologyReport rep;
  rep.n = n;
  rep.k = k;
  rep.negative = {n - k - 2, k - 1};
  rep.positive = {k - 2, n - k - 1};
  return rep;
}

}  // namespace slopepoly
