#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slopepoly/app/report.hpp"

namespace slopepoly::app {

/// Collects shapes in world coordinates and writes them into a fixed
/// 1000x1000 viewport, scaled to fit with the y axis pointing up.
class SvgCanvas {
 public:
  static constexpr double kSize = 1000.0;

  void polygon(const std::vector<Point>& vertices, const std::string& color, bool arrows,
               bool dashed = false);
  void circle(Point center, double radius, const std::string& color, bool dashed = false);
  void dot(Point p, const std::string& color);
  void legend(const std::string& color, const std::string& label);
  void caption(const std::string& text);

  std::string str() const;

 private:
  struct Shape {
    enum Kind { Polygon, Circle, Dot } kind;
    std::vector<Point> points;
    double radius = 0.0;
    std::string color;
    bool arrows = false;
    bool dashed = false;
  };
  std::vector<Shape> shapes_;
  std::vector<std::pair<std::string, std::string>> legend_;
  std::vector<std::string> captions_;
};

std::string render_slopes_svg(const SlopesInput& input, const Tolerances& tol);
std::string render_cyclic_svg(const CyclicInput& input, const Tolerances& tol);

/// Dispatches on the schema: "angles_deg" or "phis_deg".
std::string render_svg(const nlohmann::json& input, const Tolerances& tol);

}  // namespace slopepoly::app
