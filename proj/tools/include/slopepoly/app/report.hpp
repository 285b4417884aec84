#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slopepoly/slopepoly.hpp"

namespace slopepoly::app {

using Point = std::array<double, 2>;

struct TurningData {
  double t = 0.0;
  int k = 0;
  int right_turns = 0;
  int left_turns = 0;
  bool operator==(const TurningData&) const = default;
};

struct ChartData {
  std::vector<double> p;
  std::vector<double> c;
  double pi_sum = 0.0;
  double abs_p_sum = 0.0;
  int positive_count = 0;
  bool signature_ok = false;
  bool operator==(const ChartData&) const = default;
};

struct TopologyData {
  int n = 0;
  int k = 0;
  std::string negative;
  std::string positive;
  bool operator==(const TopologyData&) const = default;
};

struct CriticalPointData {
  double r = 0.0;
  double perimeter = 0.0;
  double area = 0.0;
  int omega = 0;
  Point incenter{};
  std::vector<Point> vertices;
  std::vector<double> eigenvalues;
  std::vector<int> minor_signs;
  int mu_eigen = 0;
  int mu_formula = 0;
  bool agreement = false;
  double gradient_norm = 0.0;
  std::optional<double> det_lhs;
  std::optional<double> det_rhs;
  bool operator==(const CriticalPointData&) const = default;
};

struct SlopesReport {
  std::vector<double> angles_deg;
  std::vector<double> angles_rad;
  Tolerances tolerances;
  TurningData turning;
  ChartData chart;
  TopologyData topology;
  bool exceptional = false;
  std::vector<CriticalPointData> critical_points;
  std::vector<std::string> failed_checks;
  bool operator==(const SlopesReport&) const = default;
};

struct DualData {
  std::vector<Point> vertices;
  std::vector<double> directions_deg;
  std::vector<double> directions_rad;
  double perimeter = 0.0;
  double expected_perimeter = 0.0;  ///< 2 R B
  double area = 0.0;
  double inradius = 0.0;
  bool operator==(const DualData&) const = default;
};

struct CyclicIndices {
  int area_numeric = 0;
  int area_formula = 0;
  int dual_perimeter = 0;
  bool identity_holds = false;
  std::vector<double> area_eigenvalues;
  std::vector<double> dual_eigenvalues;
  bool operator==(const CyclicIndices&) const = default;
};

struct CyclicReport {
  double radius = 0.0;
  Point center{};
  std::vector<double> phis_deg;
  std::vector<double> phis_rad;
  Tolerances tolerances;
  std::vector<int> eps;
  std::vector<double> alpha_deg;
  std::vector<double> alpha_rad;
  int e = 0;
  int omega = 0;
  double bifurcation_sum = 0.0;
  double tan_sum = 0.0;
  bool bifurcating = false;
  std::optional<DualData> dual;
  std::optional<CyclicIndices> indices;
  std::string withheld_reason;
  std::vector<std::string> failed_checks;
  bool operator==(const CyclicReport&) const = default;
};

/// Schema violation in an input file, with the offending field or line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SlopesInput {
  std::vector<double> angles_deg;
};

struct CyclicInput {
  double radius = 1.0;
  Point center{};
  std::vector<double> phis_deg;
};

/// Parses text as JSON; syntax errors carry line and column.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);
nlohmann::json read_json_file(const std::string& path);

SlopesInput parse_slopes_input(const nlohmann::json& j, const std::string& context = "");
CyclicInput parse_cyclic_input(const nlohmann::json& j, const std::string& context = "");

SlopesReport analyze_slopes(const SlopesInput& input, const Tolerances& tol);
CyclicReport analyze_cyclic(const CyclicInput& input, const Tolerances& tol);

std::string format_text(const SlopesReport& report);
std::string format_text(const CyclicReport& report);

void to_json(nlohmann::json& j, const SlopesReport& r);
void from_json(const nlohmann::json& j, SlopesReport& r);
void to_json(nlohmann::json& j, const CyclicReport& r);
void from_json(const nlohmann::json& j, CyclicReport& r);

nlohmann::json tolerances_json(const Tolerances& tol);
Tolerances tolerances_from_json(const nlohmann::json& j);

/// Serialization with enough digits for an exact round trip.
std::string dump(const nlohmann::json& j);

}  // namespace slopepoly::app
