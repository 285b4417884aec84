#include "slopepoly/app/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace slopepoly::app {

using nlohmann::json;

namespace {

Point to_point(Vec2 v) { return {v.x, v.y}; }

std::vector<Point> to_points(const PolygonChain& polygon) {
  std::vector<Point> out;
  for (const Vec2& v : polygon.vertices()) out.push_back(to_point(v));
  return out;
}

std::string fmt(double v, int precision = 10) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

template <typename T>
std::string join(const std::vector<T>& values, int precision = 10) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    if constexpr (std::is_floating_point_v<T>) {
      os << fmt(values[i], precision);
    } else {
      os << values[i];
    }
  }
  os << ']';
  return os.str();
}

const json& require(const json& j, const char* key, const std::string& context) {
  if (!j.is_object()) throw InputError(context + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(context + ": missing required field \"" + key + "\"");
  return *it;
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) {
    throw InputError(where + ": expected a number, got " + std::string(v.type_name()));
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(where + ": value is not finite");
  return d;
}

std::vector<double> number_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number_at(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string field(const std::string& context, const char* name) {
  return context.empty() ? name : context + "." + name;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

// ---- input ----

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << column << ": invalid JSON";
    throw InputError(os.str());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

SlopesInput parse_slopes_input(const json& j, const std::string& context) {
  const std::string where = context.empty() ? "input" : context;
  SlopesInput in;
  in.angles_deg = number_array(require(j, "angles_deg", where), field(context, "angles_deg"));
  if (in.angles_deg.size() < 3) {
    throw InputError(field(context, "angles_deg") + ": at least 3 slopes are required");
  }
  return in;
}

CyclicInput parse_cyclic_input(const json& j, const std::string& context) {
  const std::string where = context.empty() ? "input" : context;
  CyclicInput in;
  in.radius = number_at(require(j, "radius", where), field(context, "radius"));
  if (!(in.radius > 0.0)) throw InputError(field(context, "radius") + ": must be positive");
  in.phis_deg = number_array(require(j, "phis_deg", where), field(context, "phis_deg"));
  if (in.phis_deg.size() < 3) {
    throw InputError(field(context, "phis_deg") + ": at least 3 vertices are required");
  }
  if (const auto it = j.find("center"); it != j.end()) {
    const auto c = number_array(*it, field(context, "center"));
    if (c.size() != 2) throw InputError(field(context, "center") + ": expected [x, y]");
    in.center = {c[0], c[1]};
  }
  return in;
}

// ---- analysis ----

SlopesReport analyze_slopes(const SlopesInput& input, const Tolerances& tol) {
  SlopesReport rep;
  rep.angles_deg = input.angles_deg;
  rep.tolerances = tol;
  const SlopeSystem system = SlopeSystem::from_degrees(input.angles_deg, tol);
  for (const auto& s : system.slopes()) rep.angles_rad.push_back(s.angle());
  const std::size_t n = system.size();

  const TurningSum ts = turning_sum(system, tol);
  const TurnCounts tc = turn_counts(system);
  rep.turning = {ts.t, ts.k, tc.right, tc.left};

  const RadiiChart chart = build_chart(system, tol);
  rep.chart = {chart.p,       chart.c, chart.pi_sum, chart.abs_p_sum(), chart.positive_count,
               chart.positive_count == chart.k - 1};
  if (!rep.chart.signature_ok) rep.failed_checks.push_back("signature: #{p > 0} != k - 1");

  const TopologyReport topo = topology_report(system, tol);
  rep.topology = {topo.n, topo.k, topo.negative.to_string(), topo.positive.to_string()};

  const CriticalPoints points = tangential_critical_points(chart, tol);
  const auto* pair = std::get_if<CriticalPair>(&points);
  rep.exceptional = pair == nullptr;
  if (!pair) return rep;

  int mu_sum = 0;
  for (const TangentialCritical* q : {&pair->positive, &pair->negative}) {
    CriticalPointData d;
    d.r = q->r;
    d.perimeter = q->perimeter;
    d.area = q->area;
    d.omega = q->omega;
    d.incenter = to_point(q->incenter);
    d.vertices = to_points(q->polygon);
    d.gradient_norm = q->gradient_norm;
    const IndexReport idx = morse_index_eigen(*q, tol);
    d.eigenvalues = idx.eigenvalues;
    d.minor_signs = idx.minor_signs;
    d.mu_eigen = idx.mu_eigen;
    d.mu_formula = idx.mu_formula;
    d.agreement = idx.agreement;
    mu_sum += idx.mu_eigen;
    if (n >= 4) {
      const DeterminantIdentity det = hessian_det_identity(*q);
      d.det_lhs = det.lhs;
      d.det_rhs = det.rhs;
      if (det.relative_error() > tol.det_identity) {
        rep.failed_checks.push_back("det_identity at r=" + fmt(q->r) +
                                    ": relative error " + fmt(det.relative_error(), 3));
      }
    }

    const std::string at = " at r=" + fmt(q->r);
    if (q->gradient_norm > tol.gradient) {
      rep.failed_checks.push_back("gradient" + at + ": norm " + fmt(q->gradient_norm, 3));
    }
    const double area_scale = 0.5 * chart.abs_p_sum() * q->r * q->r;
    if (std::abs(std::abs(q->area) - 1.0) > tol.chart_law * area_scale) {
      rep.failed_checks.push_back("unit_area" + at + ": area " + fmt(q->area, 17));
    }
    if (std::abs(q->area - 0.5 * q->perimeter * q->r) > tol.chart_law * area_scale) {
      rep.failed_checks.push_back("area_perimeter_inradius" + at);
    }
    if (!idx.agreement) {
      rep.failed_checks.push_back("index" + at + ": eigen " + std::to_string(idx.mu_eigen) +
                                  " != formula " + std::to_string(idx.mu_formula));
    }
    rep.critical_points.push_back(std::move(d));
  }
  if (mu_sum != static_cast<int>(n) - 3) {
    rep.failed_checks.push_back("index_complement: mu(Q) + mu(-Q) = " + std::to_string(mu_sum));
  }
  return rep;
}

CyclicReport analyze_cyclic(const CyclicInput& input, const Tolerances& tol) {
  CyclicReport rep;
  rep.radius = input.radius;
  rep.center = input.center;
  rep.phis_deg = input.phis_deg;
  rep.tolerances = tol;
  const CyclicPolygon polygon =
      CyclicPolygon::from_degrees({input.center[0], input.center[1]}, input.radius, input.phis_deg, tol);
  for (double phi : input.phis_deg) rep.phis_rad.push_back(deg_to_rad(phi));

  const CyclicInvariants inv = cyclic_invariants(polygon, tol);
  rep.eps = inv.eps;
  rep.alpha_rad = inv.alpha;
  for (double a : inv.alpha) rep.alpha_deg.push_back(rad_to_deg(a));
  rep.e = inv.e;
  rep.omega = inv.omega;
  rep.bifurcation_sum = inv.bifurcation_sum;
  rep.tan_sum = inv.tan_sum;
  rep.bifurcating = bifurcation_test(polygon, tol);

  const double scale = 2.0 * input.radius * inv.tan_sum;
  try {
    const DualPolygon dual = dual_polygon(polygon, tol);
    DualData d;
    d.vertices = to_points(dual.polygon);
    for (const auto& s : dual.directions) {
      d.directions_deg.push_back(s.degrees());
      d.directions_rad.push_back(s.angle());
    }
    d.perimeter = dual.perimeter;
    d.expected_perimeter = 2.0 * input.radius * inv.bifurcation_sum;
    d.area = dual.area;
    d.inradius = dual.inradius;
    if (std::abs(d.perimeter - d.expected_perimeter) > tol.length * scale) {
      rep.failed_checks.push_back("dual_perimeter: " + fmt(d.perimeter, 17) + " != 2RB = " +
                                  fmt(d.expected_perimeter, 17));
    }
    rep.dual = std::move(d);
  } catch (const GeometryError& e) {
    rep.withheld_reason = std::string("dual polygon unavailable: ") + e.what();
  }

  if (rep.bifurcating) {
    rep.withheld_reason = "bifurcating: |sum eps tan alpha| = " + fmt(std::abs(inv.bifurcation_sum), 3) +
                          " is below tolerance; the area critical point is degenerate";
    try {
      (void)area_morse_index_numeric(polygon, tol);
      rep.failed_checks.push_back("bifurcation: area Hessian is nondegenerate at a bifurcating polygon");
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::DegenerateCritical) throw;
    }
    return rep;
  }
  if (!rep.dual) return rep;

  const DualityReport dr = duality_index_check(polygon, tol);
  CyclicIndices idx;
  idx.area_numeric = dr.mu_area_numeric;
  idx.area_formula = dr.mu_area_formula;
  idx.dual_perimeter = dr.mu_dual_perimeter;
  idx.identity_holds = dr.identity_holds;
  idx.area_eigenvalues = area_morse_index_report(polygon, tol).eigenvalues;
  idx.dual_eigenvalues = dr.dual_index ? dr.dual_index->eigenvalues : dr.dual_offsets.eigenvalues;
  if (!idx.identity_holds) {
    rep.failed_checks.push_back("index_duality: area numeric " + std::to_string(idx.area_numeric) +
                                ", formula " + std::to_string(idx.area_formula) + ", dual " +
                                std::to_string(idx.dual_perimeter));
  }
  rep.indices = std::move(idx);
  return rep;
}

// ---- text ----

std::string format_text(const SlopesReport& r) {
  std::ostringstream os;
  os << "slopes (deg): " << join(r.angles_deg) << "\n";
  os << "turning sum: " << fmt(r.turning.t) << " = " << r.turning.k << " pi, right turns "
     << r.turning.right_turns << ", left turns " << r.turning.left_turns << "\n";
  os << "p: " << join(r.chart.p) << "\n";
  os << "Pi: " << fmt(r.chart.pi_sum) << " (sum |p| " << fmt(r.chart.abs_p_sum) << "), #{p>0} = "
     << r.chart.positive_count << (r.chart.signature_ok ? " = k-1" : " != k-1") << "\n";
  os << "topology: area -1 component " << r.topology.negative << ", area +1 component "
     << r.topology.positive << "\n";
  if (r.exceptional) {
    os << "exceptional: tangential polygon has zero area, no critical points\n";
  }
  for (const auto& c : r.critical_points) {
    os << "critical point r=" << fmt(c.r) << ": perimeter " << fmt(c.perimeter) << ", area "
       << fmt(c.area) << ", winding " << c.omega << "\n";
    os << "  eigenvalues " << join(c.eigenvalues, 6) << "\n";
    os << "  index eigen " << c.mu_eigen << ", formula " << c.mu_formula
       << (c.agreement ? " (agree)" : " (DISAGREE)") << ", gradient " << fmt(c.gradient_norm, 3) << "\n";
  }
  for (const auto& f : r.failed_checks) os << "FAILED " << f << "\n";
  return os.str();
}

std::string format_text(const CyclicReport& r) {
  std::ostringstream os;
  os << "circle: center (" << fmt(r.center[0]) << ", " << fmt(r.center[1]) << "), radius "
     << fmt(r.radius) << "\n";
  os << "phis (deg): " << join(r.phis_deg) << "\n";
  os << "eps: " << join(r.eps) << "\n";
  os << "alpha (deg): " << join(r.alpha_deg) << "\n";
  os << "e = " << r.e << ", winding = " << r.omega << ", B = " << fmt(r.bifurcation_sum) << "\n";
  if (r.dual) {
    os << "dual perimeter " << fmt(r.dual->perimeter) << " (2RB = " << fmt(r.dual->expected_perimeter)
       << "), dual area " << fmt(r.dual->area) << "\n";
  }
  if (r.bifurcating) os << "bifurcating: yes\n";
  if (r.indices) {
    os << "area index: numeric " << r.indices->area_numeric << ", formula " << r.indices->area_formula
       << "\n";
    os << "dual perimeter index: " << r.indices->dual_perimeter << " (n-3-mu = "
       << static_cast<int>(r.phis_deg.size()) - 3 - r.indices->dual_perimeter << ")\n";
    os << "identity holds: " << (r.indices->identity_holds ? "yes" : "no") << "\n";
  } else {
    os << "indices withheld: " << r.withheld_reason << "\n";
  }
  for (const auto& f : r.failed_checks) os << "FAILED " << f << "\n";
  return os.str();
}

// ---- JSON ----

json tolerances_json(const Tolerances& t) {
  return {{"parallel", t.parallel},
          {"on_boundary", t.on_boundary},
          {"degenerate", t.degenerate},
          {"integrality", t.integrality},
          {"winding_residual", t.winding_residual},
          {"exceptional", t.exceptional},
          {"eigen_band", t.eigen_band},
          {"area_band", t.area_band},
          {"antipodal", t.antipodal},
          {"coincident", t.coincident},
          {"bifurcation", t.bifurcation},
          {"length", t.length},
          {"criticality", t.criticality},
          {"gradient", t.gradient},
          {"det_identity", t.det_identity},
          {"chart_law", t.chart_law},
          {"max_condition", t.max_condition}};
}

Tolerances tolerances_from_json(const json& j) {
  Tolerances t;
  t.parallel = j.at("parallel").get<double>();
  t.on_boundary = j.at("on_boundary").get<double>();
  t.degenerate = j.at("degenerate").get<double>();
  t.integrality = j.at("integrality").get<double>();
  t.winding_residual = j.at("winding_residual").get<double>();
  t.exceptional = j.at("exceptional").get<double>();
  t.eigen_band = j.at("eigen_band").get<double>();
  t.area_band = j.at("area_band").get<double>();
  t.antipodal = j.at("antipodal").get<double>();
  t.coincident = j.at("coincident").get<double>();
  t.bifurcation = j.at("bifurcation").get<double>();
  t.length = j.at("length").get<double>();
  t.criticality = j.at("criticality").get<double>();
  t.gradient = j.at("gradient").get<double>();
  t.det_identity = j.at("det_identity").get<double>();
  t.chart_law = j.at("chart_law").get<double>();
  t.max_condition = j.at("max_condition").get<double>();
  return t;
}

void to_json(json& j, const CriticalPointData& c) {
  j = {{"r", c.r},
       {"perimeter", c.perimeter},
       {"area", c.area},
       {"omega", c.omega},
       {"incenter", c.incenter},
       {"vertices", c.vertices},
       {"eigenvalues", c.eigenvalues},
       {"minor_signs", c.minor_signs},
       {"mu_eigen", c.mu_eigen},
       {"mu_formula", c.mu_formula},
       {"agreement", c.agreement},
       {"gradient_norm", c.gradient_norm},
       {"det_identity", c.det_lhs ? json{{"lhs", *c.det_lhs}, {"rhs", *c.det_rhs}} : json(nullptr)}};
}

void from_json(const json& j, CriticalPointData& c) {
  c.r = j.at("r").get<double>();
  c.perimeter = j.at("perimeter").get<double>();
  c.area = j.at("area").get<double>();
  c.omega = j.at("omega").get<int>();
  c.incenter = j.at("incenter").get<Point>();
  c.vertices = j.at("vertices").get<std::vector<Point>>();
  c.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  c.minor_signs = j.at("minor_signs").get<std::vector<int>>();
  c.mu_eigen = j.at("mu_eigen").get<int>();
  c.mu_formula = j.at("mu_formula").get<int>();
  c.agreement = j.at("agreement").get<bool>();
  c.gradient_norm = j.at("gradient_norm").get<double>();
  const json& det = j.at("det_identity");
  if (det.is_null()) {
    c.det_lhs.reset();
    c.det_rhs.reset();
  } else {
    c.det_lhs = det.at("lhs").get<double>();
    c.det_rhs = det.at("rhs").get<double>();
  }
}

void to_json(json& j, const SlopesReport& r) {
  j = {{"kind", "slopes"},
       {"input", {{"angles_deg", r.angles_deg}, {"angles_rad", r.angles_rad}}},
       {"tolerances", tolerances_json(r.tolerances)},
       {"turning",
        {{"t", r.turning.t},
         {"k", r.turning.k},
         {"right_turns", r.turning.right_turns},
         {"left_turns", r.turning.left_turns}}},
       {"chart",
        {{"p", r.chart.p},
         {"c", r.chart.c},
         {"pi_sum", r.chart.pi_sum},
         {"abs_p_sum", r.chart.abs_p_sum},
         {"positive_count", r.chart.positive_count},
         {"signature_ok", r.chart.signature_ok}}},
       {"topology",
        {{"n", r.topology.n},
         {"k", r.topology.k},
         {"negative", r.topology.negative},
         {"positive", r.topology.positive}}},
       {"exceptional", r.exceptional},
       {"failed_checks", r.failed_checks}};
  if (!r.exceptional) j["critical_points"] = r.critical_points;
}

void from_json(const json& j, SlopesReport& r) {
  if (j.at("kind") != "slopes") throw InputError("report kind is not \"slopes\"");
  r.angles_deg = j.at("input").at("angles_deg").get<std::vector<double>>();
  r.angles_rad = j.at("input").at("angles_rad").get<std::vector<double>>();
  r.tolerances = tolerances_from_json(j.at("tolerances"));
  const json& t = j.at("turning");
  r.turning = {t.at("t").get<double>(), t.at("k").get<int>(), t.at("right_turns").get<int>(),
               t.at("left_turns").get<int>()};
  const json& c = j.at("chart");
  r.chart = {c.at("p").get<std::vector<double>>(), c.at("c").get<std::vector<double>>(),
             c.at("pi_sum").get<double>(),         c.at("abs_p_sum").get<double>(),
             c.at("positive_count").get<int>(),    c.at("signature_ok").get<bool>()};
  const json& tp = j.at("topology");
  r.topology = {tp.at("n").get<int>(), tp.at("k").get<int>(), tp.at("negative").get<std::string>(),
                tp.at("positive").get<std::string>()};
  r.exceptional = j.at("exceptional").get<bool>();
  r.failed_checks = j.at("failed_checks").get<std::vector<std::string>>();
  r.critical_points.clear();
  if (!r.exceptional) r.critical_points = j.at("critical_points").get<std::vector<CriticalPointData>>();
}

void to_json(json& j, const DualData& d) {
  j = {{"vertices", d.vertices},
       {"directions_deg", d.directions_deg},
       {"directions_rad", d.directions_rad},
       {"perimeter", d.perimeter},
       {"expected_perimeter", d.expected_perimeter},
       {"area", d.area},
       {"inradius", d.inradius}};
}

void from_json(const json& j, DualData& d) {
  d.vertices = j.at("vertices").get<std::vector<Point>>();
  d.directions_deg = j.at("directions_deg").get<std::vector<double>>();
  d.directions_rad = j.at("directions_rad").get<std::vector<double>>();
  d.perimeter = j.at("perimeter").get<double>();
  d.expected_perimeter = j.at("expected_perimeter").get<double>();
  d.area = j.at("area").get<double>();
  d.inradius = j.at("inradius").get<double>();
}

void to_json(json& j, const CyclicIndices& i) {
  j = {{"area_numeric", i.area_numeric},
       {"area_formula", i.area_formula},
       {"dual_perimeter", i.dual_perimeter},
       {"identity_holds", i.identity_holds},
       {"area_eigenvalues", i.area_eigenvalues},
       {"dual_eigenvalues", i.dual_eigenvalues}};
}

void from_json(const json& j, CyclicIndices& i) {
  i.area_numeric = j.at("area_numeric").get<int>();
  i.area_formula = j.at("area_formula").get<int>();
  i.dual_perimeter = j.at("dual_perimeter").get<int>();
  i.identity_holds = j.at("identity_holds").get<bool>();
  i.area_eigenvalues = j.at("area_eigenvalues").get<std::vector<double>>();
  i.dual_eigenvalues = j.at("dual_eigenvalues").get<std::vector<double>>();
}

void to_json(json& j, const CyclicReport& r) {
  j = {{"kind", "cyclic"},
       {"input",
        {{"radius", r.radius}, {"center", r.center}, {"phis_deg", r.phis_deg}, {"phis_rad", r.phis_rad}}},
       {"tolerances", tolerances_json(r.tolerances)},
       {"invariants",
        {{"eps", r.eps},
         {"alpha_deg", r.alpha_deg},
         {"alpha_rad", r.alpha_rad},
         {"e", r.e},
         {"omega", r.omega},
         {"B", r.bifurcation_sum},
         {"tan_sum", r.tan_sum}}},
       {"bifurcating", r.bifurcating},
       {"dual", optional_json(r.dual)},
       {"indices", optional_json(r.indices)},
       {"failed_checks", r.failed_checks}};
  if (!r.indices) j["indices_withheld_reason"] = r.withheld_reason;
}

void from_json(const json& j, CyclicReport& r) {
  if (j.at("kind") != "cyclic") throw InputError("report kind is not \"cyclic\"");
  const json& in = j.at("input");
  r.radius = in.at("radius").get<double>();
  r.center = in.at("center").get<Point>();
  r.phis_deg = in.at("phis_deg").get<std::vector<double>>();
  r.phis_rad = in.at("phis_rad").get<std::vector<double>>();
  r.tolerances = tolerances_from_json(j.at("tolerances"));
  const json& inv = j.at("invariants");
  r.eps = inv.at("eps").get<std::vector<int>>();
  r.alpha_deg = inv.at("alpha_deg").get<std::vector<double>>();
  r.alpha_rad = inv.at("alpha_rad").get<std::vector<double>>();
  r.e = inv.at("e").get<int>();
  r.omega = inv.at("omega").get<int>();
  r.bifurcation_sum = inv.at("B").get<double>();
  r.tan_sum = inv.at("tan_sum").get<double>();
  r.bifurcating = j.at("bifurcating").get<bool>();
  r.dual = optional_from<DualData>(j.at("dual"));
  r.indices = optional_from<CyclicIndices>(j.at("indices"));
  r.withheld_reason = j.value("indices_withheld_reason", std::string());
  r.failed_checks = j.at("failed_checks").get<std::vector<std::string>>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace slopepoly::app
