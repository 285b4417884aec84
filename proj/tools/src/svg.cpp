#include "slopepoly/app/svg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "slopepoly/slopepoly.hpp"

namespace slopepoly::app {

namespace {

constexpr double kMargin = 60.0;
constexpr double kLegendHeight = 120.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string marker_id(const std::string& color) {
  std::string id = "arrow";
  for (char c : color) {
    if (std::isalnum(static_cast<unsigned char>(c))) id += c;
  }
  return id;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::vector<Point> points_of(const PolygonChain& p) {
  std::vector<Point> out;
  for (const Vec2& v : p.vertices()) out.push_back({v.x, v.y});
  return out;
}

}  // namespace

void SvgCanvas::polygon(const std::vector<Point>& vertices, const std::string& color, bool arrows,
                        bool dashed) {
  shapes_.push_back({Shape::Polygon, vertices, 0.0, color, arrows, dashed});
}

void SvgCanvas::circle(Point center, double radius, const std::string& color, bool dashed) {
  shapes_.push_back({Shape::Circle, {center}, radius, color, false, dashed});
}

void SvgCanvas::dot(Point p, const std::string& color) {
  shapes_.push_back({Shape::Dot, {p}, 0.0, color, false, false});
}

void SvgCanvas::legend(const std::string& color, const std::string& label) {
  legend_.emplace_back(color, label);
}

void SvgCanvas::caption(const std::string& text) { captions_.push_back(text); }

std::string SvgCanvas::str() const {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  auto include = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& s : shapes_) {
    for (const auto& p : s.points) {
      if (s.kind == Shape::Circle) {
        include(p[0] - s.radius, p[1] - s.radius);
        include(p[0] + s.radius, p[1] + s.radius);
      } else {
        include(p[0], p[1]);
      }
    }
  }
  if (!std::isfinite(xmin)) {
    xmin = ymin = -1.0;
    xmax = ymax = 1.0;
  }
  const double top = kMargin + kLegendHeight;
  const double avail_w = kSize - 2.0 * kMargin;
  const double avail_h = kSize - kMargin - top;
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = std::min(avail_w, avail_h) / extent;
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  auto sx = [&](double x) { return kSize / 2.0 + (x - cx) * scale; };
  auto sy = [&](double y) { return top + avail_h / 2.0 - (y - cy) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  os << "<defs>\n";
  std::vector<std::string> seen;
  for (const auto& s : shapes_) {
    if (!s.arrows || std::find(seen.begin(), seen.end(), s.color) != seen.end()) continue;
    seen.push_back(s.color);
    os << "  <marker id=\"" << marker_id(s.color)
       << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
          "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\""
       << s.color << "\"/></marker>\n";
  }
  os << "</defs>\n";
  os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  for (const auto& s : shapes_) {
    const std::string dash = s.dashed ? " stroke-dasharray=\"8,5\"" : "";
    switch (s.kind) {
      case Shape::Circle:
        os << "<circle cx=\"" << num(sx(s.points[0][0])) << "\" cy=\"" << num(sy(s.points[0][1]))
           << "\" r=\"" << num(s.radius * scale) << "\" fill=\"none\" stroke=\"" << s.color
           << "\" stroke-width=\"1.5\"" << dash << "/>\n";
        break;
      case Shape::Dot:
        os << "<circle cx=\"" << num(sx(s.points[0][0])) << "\" cy=\"" << num(sy(s.points[0][1]))
           << "\" r=\"4\" fill=\"" << s.color << "\"/>\n";
        break;
      case Shape::Polygon: {
        const std::size_t n = s.points.size();
        if (!s.arrows) {
          os << "<polygon points=\"";
          for (std::size_t i = 0; i < n; ++i) {
            os << (i ? " " : "") << num(sx(s.points[i][0])) << "," << num(sy(s.points[i][1]));
          }
          os << "\" fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\"" << dash << "/>\n";
          break;
        }
        os << "<g stroke=\"" << s.color << "\" stroke-width=\"2\"" << dash << ">\n";
        for (std::size_t i = 0; i < n; ++i) {
          const Point& a = s.points[i];
          const Point& b = s.points[(i + 1) % n];
          os << "  <line x1=\"" << num(sx(a[0])) << "\" y1=\"" << num(sy(a[1])) << "\" x2=\""
             << num(sx(b[0])) << "\" y2=\"" << num(sy(b[1])) << "\" marker-end=\"url(#"
             << marker_id(s.color) << ")\"/>\n";
        }
        os << "</g>\n";
        break;
      }
    }
  }

  os << "<g font-family=\"sans-serif\" font-size=\"16\">\n";
  os << "  <rect x=\"20\" y=\"20\" width=\"560\" height=\"" << num(24.0 * static_cast<double>(
                                                                     legend_.size() + captions_.size()) + 16.0)
     << "\" fill=\"white\" stroke=\"#999\"/>\n";
  double y = 44.0;
  for (const auto& [color, label] : legend_) {
    os << "  <line x1=\"32\" y1=\"" << num(y - 5) << "\" x2=\"62\" y2=\"" << num(y - 5) << "\" stroke=\""
       << color << "\" stroke-width=\"3\"/>\n";
    os << "  <text x=\"72\" y=\"" << num(y) << "\">" << escape(label) << "</text>\n";
    y += 24.0;
  }
  for (const auto& c : captions_) {
    os << "  <text x=\"32\" y=\"" << num(y) << "\">" << escape(c) << "</text>\n";
    y += 24.0;
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_slopes_svg(const SlopesInput& input, const Tolerances& tol) {
  const SlopeSystem system = SlopeSystem::from_degrees(input.angles_deg, tol);
  const RadiiChart chart = build_chart(system, tol);
  const CriticalPoints points = tangential_critical_points(chart, tol);
  SvgCanvas canvas;
  std::ostringstream caption;
  caption << std::setprecision(6);
  if (const auto* pair = std::get_if<CriticalPair>(&points)) {
    const TangentialCritical& q = pair->positive;
    canvas.polygon(points_of(q.polygon), "#1f5fbf", true);
    canvas.circle({q.incenter.x, q.incenter.y}, std::abs(q.r), "#d0702a", true);
    canvas.dot({q.incenter.x, q.incenter.y}, "#d0702a");
    canvas.legend("#1f5fbf", "tangential critical point (directed edges)");
    canvas.legend("#d0702a", "inscribed circle");
    const IndexReport idx = morse_index_eigen(q, tol);
    caption << "r = " << q.r << ", perimeter = " << q.perimeter << ", area = " << q.area
            << ", index = " << idx.mu_eigen;
  } else {
    // zero-area tangential polygon with unit inradius
    RadiiPoint pt{std::vector<double>(chart.dimension(), 1.0)};
    const PolygonChain q = polygon_from_radii(chart, pt, tol);
    const Vec2 center = system[0].left_normal();
    canvas.polygon(points_of(q), "#7a7a7a", true);
    canvas.circle({center.x, center.y}, 1.0, "#d0702a", true);
    canvas.legend("#7a7a7a", "exceptional: tangential polygon of zero area");
    canvas.legend("#d0702a", "inscribed circle (radius 1)");
    caption << "Pi = " << chart.pi_sum << ", no critical points";
  }
  canvas.caption(caption.str());
  return canvas.str();
}

std::string render_cyclic_svg(const CyclicInput& input, const Tolerances& tol) {
  const CyclicPolygon polygon =
      CyclicPolygon::from_degrees({input.center[0], input.center[1]}, input.radius, input.phis_deg, tol);
  const CyclicInvariants inv = cyclic_invariants(polygon, tol);
  SvgCanvas canvas;
  canvas.circle(input.center, input.radius, "#7a7a7a");
  canvas.dot(input.center, "#7a7a7a");
  canvas.polygon(points_of(polygon.polygon(tol)), "#1f5fbf", true);
  canvas.legend("#1f5fbf", "cyclic polygon (directed edges)");
  canvas.legend("#7a7a7a", "circumscribed circle");
  try {
    const DualPolygon dual = dual_polygon(polygon, tol);
    canvas.polygon(points_of(dual.polygon), "#c23b3b", true, true);
    canvas.legend("#c23b3b", "dual tangential polygon");
  } catch (const GeometryError&) {
    canvas.caption("dual polygon degenerate");
  }
  std::ostringstream caption;
  caption << std::setprecision(6) << "e = " << inv.e << ", winding = " << inv.omega
          << ", B = " << inv.bifurcation_sum;
  canvas.caption(caption.str());
  return canvas.str();
}

std::string render_svg(const nlohmann::json& input, const Tolerances& tol) {
  if (input.is_object() && input.contains("angles_deg")) {
    return render_slopes_svg(parse_slopes_input(input), tol);
  }
  if (input.is_object() && input.contains("phis_deg")) {
    return render_cyclic_svg(parse_cyclic_input(input), tol);
  }
  throw InputError("input: expected a slopes file (\"angles_deg\") or a cyclic file (\"phis_deg\")");
}

}  // namespace slopepoly::app
