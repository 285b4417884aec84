#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slopepoly/tolerances.hpp"

namespace slopepoly::app {

/// Slope systems a(t) = (1 - t) from + t to, angles in degrees.
struct FamilyInput {
  std::vector<double> from_deg;
  std::vector<double> to_deg;
};

FamilyInput parse_family_input(const nlohmann::json& j);

struct FamilyRow {
  double t = 0.0;
  bool valid = true;
  std::string note;  ///< why the system is invalid
  int k = 0;
  double pi_sum = 0.0;
  double relative_pi = 0.0;  ///< Pi / sum |p|
  bool exists = false;       ///< critical points exist
  int area_sign = 0;         ///< sign of the area of both critical points
  std::optional<int> mu_positive;
  std::optional<int> mu_negative;
};

struct FamilyBracket {
  double t_lo = 0.0;
  double t_hi = 0.0;
  /// Bisection end point at which the system is exceptional.
  std::optional<double> root;
  double root_relative_pi = 0.0;
  /// The sign change happens through a parallel or ill-conditioned system.
  bool singular = false;
};

struct FamilyTable {
  std::vector<FamilyRow> rows;
  std::vector<FamilyBracket> brackets;
};

/// Evaluates the family at steps + 1 evenly spaced parameters and refines
/// every sign change of Pi by bisection.
FamilyTable run_family(const FamilyInput& input, std::size_t steps, const Tolerances& tol);

/// One row of the family at parameter t.
FamilyRow evaluate_family(const FamilyInput& input, double t, const Tolerances& tol);

std::string format_text(const FamilyTable& table);
nlohmann::json to_json(const FamilyTable& table);

}  // namespace slopepoly::app
