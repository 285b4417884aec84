#include "slopepoly/app/family.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "slopepoly/app/report.hpp"
#include "slopepoly/slopepoly.hpp"

namespace slopepoly::app {

namespace {

std::vector<double> interpolate(const FamilyInput& in, double t) {
  std::vector<double> out(in.from_deg.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (1.0 - t) * in.from_deg[i] + t * in.to_deg[i];
  return out;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

FamilyInput parse_family_input(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("input: expected a JSON object");
  for (const char* key : {"from", "to"}) {
    if (!j.contains(key)) throw InputError(std::string("input: missing required field \"") + key + "\"");
  }
  FamilyInput in{parse_slopes_input(j["from"], "from").angles_deg,
                 parse_slopes_input(j["to"], "to").angles_deg};
  if (in.from_deg.size() != in.to_deg.size()) {
    throw InputError("to.angles_deg: expected " + std::to_string(in.from_deg.size()) + " angles like from");
  }
  return in;
}

FamilyRow evaluate_family(const FamilyInput& input, double t, const Tolerances& tol) {
  FamilyRow row;
  row.t = t;
  try {
    const SlopeSystem system = SlopeSystem::from_degrees(interpolate(input, t), tol);
    const RadiiChart chart = build_chart(system, tol);
    row.k = chart.k;
    row.pi_sum = chart.pi_sum;
    row.relative_pi = chart.pi_sum / chart.abs_p_sum();
    const CriticalPoints points = tangential_critical_points(chart, tol);
    if (const auto* pair = std::get_if<CriticalPair>(&points)) {
      row.exists = true;
      row.area_sign = sign_of(pair->positive.area);
      row.mu_positive = morse_index_eigen(pair->positive, tol).mu_eigen;
      row.mu_negative = morse_index_eigen(pair->negative, tol).mu_eigen;
    }
  } catch (const GeometryError& e) {
    if (!e.is_input_error() && e.code() != ErrorCode::ReconstructionDegenerate &&
        e.code() != ErrorCode::DegenerateHessian) {
      throw;
    }
    row.valid = false;
    row.note = e.what();
  }
  return row;
}

FamilyTable run_family(const FamilyInput& input, std::size_t steps, const Tolerances& tol) {
  if (steps == 0) throw InputError("--steps: must be at least 1");
  FamilyTable table;
  for (std::size_t i = 0; i <= steps; ++i) {
    table.rows.push_back(evaluate_family(input, static_cast<double>(i) / static_cast<double>(steps), tol));
  }

  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    const FamilyRow& a = table.rows[i];
    const FamilyRow& b = table.rows[i + 1];
    if (!a.valid || !b.valid) continue;
    const int sa = sign_of(a.pi_sum);
    const int sb = sign_of(b.pi_sum);
    if (sa == sb || sa == 0 || sb == 0) continue;

    FamilyBracket br{a.t, b.t, std::nullopt, 0.0, false};
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (br.t_lo + br.t_hi);
      if (mid <= br.t_lo || mid >= br.t_hi) break;
      const FamilyRow m = evaluate_family(input, mid, tol);
      if (!m.valid) {
        br.singular = true;
        break;
      }
      if (!m.exists) {
        br.root = mid;
        br.root_relative_pi = m.relative_pi;
        break;
      }
      if (sign_of(m.pi_sum) == sa) {
        br.t_lo = mid;
      } else {
        br.t_hi = mid;
      }
    }
    if (!br.root) br.singular = true;
    table.brackets.push_back(br);
  }
  return table;
}

std::string format_text(const FamilyTable& table) {
  std::ostringstream os;
  os << std::setw(10) << "t" << std::setw(4) << "k" << std::setw(16) << "Pi" << std::setw(14) << "Pi/sum|p|"
     << std::setw(8) << "exists" << std::setw(6) << "sign" << std::setw(6) << "mu+" << std::setw(6) << "mu-"
     << "\n";
  for (const auto& r : table.rows) {
    os << std::setw(10) << std::setprecision(6) << r.t;
    if (!r.valid) {
      os << "  invalid: " << r.note << "\n";
      continue;
    }
    os << std::setw(4) << r.k << std::setw(16) << std::setprecision(8) << r.pi_sum << std::setw(14)
       << std::setprecision(5) << r.relative_pi << std::setw(8) << (r.exists ? "yes" : "no") << std::setw(6)
       << (r.area_sign > 0 ? "+" : r.area_sign < 0 ? "-" : "0");
    os << std::setw(6) << (r.mu_positive ? std::to_string(*r.mu_positive) : "-") << std::setw(6)
       << (r.mu_negative ? std::to_string(*r.mu_negative) : "-") << "\n";
  }
  for (const auto& b : table.brackets) {
    os << std::setprecision(17) << "Pi changes sign in [" << b.t_lo << ", " << b.t_hi << "]";
    if (b.root) {
      os << "; exceptional at t = " << *b.root << " (Pi/sum|p| = " << std::setprecision(3)
         << b.root_relative_pi << ")";
    }
    if (b.singular) os << "; through a singular system";
    os << "\n";
  }
  if (table.brackets.empty()) os << "Pi keeps its sign\n";
  return os.str();
}

nlohmann::json to_json(const FamilyTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    nlohmann::json row{{"t", r.t}, {"valid", r.valid}};
    if (!r.valid) {
      row["note"] = r.note;
    } else {
      row.update({{"k", r.k},
                  {"pi_sum", r.pi_sum},
                  {"relative_pi", r.relative_pi},
                  {"exists", r.exists},
                  {"area_sign", r.area_sign},
                  {"mu_positive", r.mu_positive ? nlohmann::json(*r.mu_positive) : nlohmann::json(nullptr)},
                  {"mu_negative", r.mu_negative ? nlohmann::json(*r.mu_negative) : nlohmann::json(nullptr)}});
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json brackets = nlohmann::json::array();
  for (const auto& b : table.brackets) {
    brackets.push_back({{"t_lo", b.t_lo},
                        {"t_hi", b.t_hi},
                        {"root", b.root ? nlohmann::json(*b.root) : nlohmann::json(nullptr)},
                        {"root_relative_pi", b.root_relative_pi},
                        {"singular", b.singular}});
  }
  return {{"rows", rows}, {"brackets", brackets}};
}

}  // namespace slopepoly::app
