#include "slopepoly/app/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "slopepoly/slopepoly.hpp"

namespace slopepoly::app {

namespace {

enum Property : std::size_t {
  kTurningSum,
  kTurnCounts,
  kSignature,
  kChartLaws,
  kAdditivity,
  kRoundTrip,
  kCriticalPoints,
  kIndexTheorem,
  kOffsetIndex,
  kDetIdentity,
  kDualPerimeter,
  kCyclicIndex,
  kIndexDuality,
  kPropertyCount,
};

struct Result {
  Outcome outcome = Outcome::Skip;
  std::string message;
};

using TrialResult = std::array<Result, kPropertyCount>;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

void fail(Result& r, std::string message) {
  r.outcome = Outcome::Fail;
  r.message = std::move(message);
}

void check(Result& r, bool ok, const std::string& message) {
  if (r.outcome == Outcome::Fail) return;
  if (ok) {
    r.outcome = Outcome::Pass;
  } else {
    fail(r, message);
  }
}

bool close(double a, double b, double tol, double scale) { return std::abs(a - b) <= tol * scale; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void tangential_properties(const SlopeSystem& system, std::mt19937_64& rng, const Tolerances& tol,
                           TrialResult& out) {
  const std::size_t n = system.size();

  const TurningSum ts = turning_sum(system, tol);
  {
    Result& r = out[kTurningSum];
    check(r, ts.k >= 1 && ts.k <= static_cast<int>(n) - 1, "k = " + std::to_string(ts.k) + " out of range");
    if (n >= 4) {
      std::vector<DirectedSlope> head(system.slopes().begin(), system.slopes().end() - 1);
      const SlopeSystem prefix(head, tol);
      const SlopeSystem triple({system[0], system[n - 2], system[n - 1]}, tol);
      const double rhs = turning_sum(prefix, tol).t + turning_sum(triple, tol).t - kPi;
      check(r, close(ts.t, rhs, tol.integrality, 1.0), "recursion residual " + num(ts.t - rhs));
    }
  }
  {
    const TurnCounts tc = turn_counts(system);
    check(out[kTurnCounts], tc.right + tc.left == static_cast<int>(n),
          "RT + LT = " + std::to_string(tc.right + tc.left));
  }

  const RadiiChart chart = build_chart(system, tol);
  check(out[kSignature], chart.positive_count == ts.k - 1,
        "#{p > 0} = " + std::to_string(chart.positive_count) + ", k = " + std::to_string(ts.k));

  // random point of the chart
  RadiiPoint pt;
  for (std::size_t i = 0; i < chart.dimension(); ++i) pt.r.push_back(uniform(rng, -1.0, 1.0));
  try {
    const PolygonChain q = polygon_from_radii(chart, pt, tol);
    double area_scale = 0.0;
    double perimeter_scale = 0.0;
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      area_scale += 0.5 * std::abs(chart.p[i]) * pt.r[i] * pt.r[i];
      perimeter_scale += std::abs(chart.p[i] * pt.r[i]);
    }
    const double area = oriented_area(q);
    const double perimeter = signed_perimeter(q, system, tol);
    check(out[kChartLaws], close(area, chart.area(pt), tol.chart_law, area_scale),
          "area " + num(area) + " vs chart " + num(chart.area(pt)));
    check(out[kChartLaws], close(perimeter, chart.perimeter(pt), tol.chart_law, perimeter_scale),
          "perimeter " + num(perimeter) + " vs chart " + num(chart.perimeter(pt)));

    const auto lines = edge_lines(system, q, tol);
    double area_sum = 0.0;
    double perimeter_sum = 0.0;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      const PolygonChain tri = decomposition_triangle(lines, i, tol);
      area_sum += oriented_area(tri);
      perimeter_sum += signed_perimeter(tri, std::array{system[0], system[i + 1], system[i + 2]}, tol);
    }
    check(out[kAdditivity], close(area, area_sum, tol.chart_law, area_scale),
          "area additivity residual " + num(area - area_sum));
    check(out[kAdditivity], close(perimeter, perimeter_sum, tol.chart_law, perimeter_scale),
          "perimeter additivity residual " + num(perimeter - perimeter_sum));

    const RadiiPoint back = radii_of_polygon(chart, q, tol);
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < pt.r.size(); ++i) {
      err = std::max(err, std::abs(back.r[i] - pt.r[i]));
      scale = std::max(scale, std::abs(pt.r[i]));
    }
    check(out[kRoundTrip], err <= tol.chart_law * 10.0 * std::max(scale, 1.0), "radii round trip error " + num(err));
  } catch (const GeometryError& e) {
    // random radii can produce coincident vertices; those trials are skipped
    if (e.code() != ErrorCode::DegeneratePolygon && e.code() != ErrorCode::ReconstructionDegenerate) throw;
  }

  if (std::abs(chart.pi_sum) < 1e-6 * chart.abs_p_sum()) return;
  const CriticalPoints points = tangential_critical_points(chart, tol);
  const auto& pair = std::get<CriticalPair>(points);
  int mu_sum = 0;
  bool degenerate = false;
  for (const TangentialCritical* q : {&pair.positive, &pair.negative}) {
    const std::string at = "r=" + num(q->r) + ": ";
    const double area_scale = 0.5 * chart.abs_p_sum() * q->r * q->r;
    check(out[kCriticalPoints], q->gradient_norm < tol.gradient, at + "gradient norm " + num(q->gradient_norm));
    check(out[kCriticalPoints], close(std::abs(q->area), 1.0, tol.chart_law, area_scale),
          at + "area " + num(q->area));
    check(out[kCriticalPoints], close(q->area, 0.5 * q->perimeter * q->r, tol.chart_law, area_scale),
          at + "A - P r / 2 = " + num(q->area - 0.5 * q->perimeter * q->r));

    try {
      const IndexReport idx = morse_index_eigen(*q, tol);
      mu_sum += idx.mu_eigen;
      check(out[kIndexTheorem], idx.agreement,
            at + "eigen " + std::to_string(idx.mu_eigen) + " formula " + std::to_string(idx.mu_formula));
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::DegenerateHessian) {
        fail(out[kIndexTheorem], at + e.what());
      }
      degenerate = true;
    }

    std::vector<double> offsets;
    for (std::size_t i = 0; i < n; ++i) {
      offsets.push_back(DirectedLine::tangent_to(system[i], q->incenter, q->r).offset);
    }
    try {
      const OffsetIndexReport off = perimeter_index_offsets(system.slopes(), offsets, tol);
      check(out[kOffsetIndex], off.index == morse_index_formula(*q),
            at + "offset chart " + std::to_string(off.index) + " formula " +
                std::to_string(morse_index_formula(*q)));
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::DegenerateHessian) fail(out[kOffsetIndex], at + e.what());
    }

    if (n >= 4) {
      const DeterminantIdentity det = hessian_det_identity(*q);
      check(out[kDetIdentity], det.relative_error() < tol.det_identity,
            at + "relative error " + num(det.relative_error()));
    }
  }
  if (!degenerate) {
    check(out[kIndexTheorem], mu_sum == static_cast<int>(n) - 3,
          "mu(Q) + mu(-Q) = " + std::to_string(mu_sum));
  }
}

void cyclic_properties(std::mt19937_64& rng, std::size_t n, const Tolerances& tol, TrialResult& out) {
  const CyclicPolygon polygon = random_cyclic_polygon(rng, n);
  const CyclicInvariants inv = cyclic_invariants(polygon, tol);
  const DualPolygon dual = dual_polygon(polygon, tol);
  const double expected = 2.0 * polygon.radius() * inv.bifurcation_sum;
  check(out[kDualPerimeter], close(dual.perimeter, expected, tol.length, 2.0 * polygon.radius() * inv.tan_sum),
        "dual perimeter " + num(dual.perimeter) + " vs 2RB " + num(expected));

  try {
    const DualityReport rep = duality_index_check(polygon, tol);
    check(out[kCyclicIndex], rep.mu_area_numeric == rep.mu_area_formula,
          "numeric " + std::to_string(rep.mu_area_numeric) + " formula " + std::to_string(rep.mu_area_formula));
    check(out[kIndexDuality], rep.identity_holds,
          "area " + std::to_string(rep.mu_area_numeric) + " dual " + std::to_string(rep.mu_dual_perimeter));
  } catch (const GeometryError& e) {
    fail(out[kCyclicIndex], e.what());
  }
}

TrialResult run_trial(const SweepOptions& opt, std::size_t index) {
  TrialResult out;
  auto rng = trial_rng(opt.seed, index);
  const std::size_t span = opt.n_max - opt.n_min + 1;
  const std::size_t n = opt.n_min + static_cast<std::size_t>(rng() % span);
  try {
    const SlopeSystem system = random_slope_system(rng, n);
    tangential_properties(system, rng, opt.tol, out);
    cyclic_properties(rng, n, opt.tol, out);
  } catch (const std::exception& e) {
    // an unexpected error on valid random input counts against every
    // property that had not completed
    for (Result& r : out) {
      if (r.outcome == Outcome::Skip) fail(r, e.what());
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& sweep_properties() {
  static const std::vector<std::string> names{
      "turning_sum",     "turn_counts",   "signature",    "chart_laws",     "additivity",
      "round_trip",      "critical_points", "index_theorem", "offset_index", "det_identity",
      "dual_perimeter",  "cyclic_index",  "index_duality"};
  return names;
}

SweepSummary run_sweep(const SweepOptions& options) {
  if (options.n_min < 3 || options.n_max < options.n_min) {
    throw GeometryError(ErrorCode::InvalidInput, "need 3 <= n-min <= n-max");
  }
  SweepSummary summary;
  summary.options = options;
  std::vector<TrialResult> results(options.trials);

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(
                                                                                std::max<std::size_t>(options.trials, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.trials; i = next++) results[i] = run_trial(options, i);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  if (options.trials == 0) return summary;
  const auto& names = sweep_properties();
  for (std::size_t p = 0; p < kPropertyCount; ++p) summary.properties.push_back({names[p], 0, 0, 0});
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t p = 0; p < kPropertyCount; ++p) {
      const Result& r = results[i][p];
      switch (r.outcome) {
        case Outcome::Pass: ++summary.properties[p].pass; break;
        case Outcome::Fail:
          ++summary.properties[p].fail;
          summary.failures.push_back({i, names[p], r.message});
          break;
        case Outcome::Skip: ++summary.properties[p].skip; break;
      }
    }
  }
  return summary;
}

std::string format_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "sweep seed=" << s.options.seed << " trials=" << s.options.trials << " n=[" << s.options.n_min
     << "," << s.options.n_max << "]\n";
  if (s.properties.empty()) {
    os << "no trials\nresult: PASS\n";
    return os.str();
  }
  os << std::left << std::setw(18) << "property" << std::right << std::setw(8) << "pass" << std::setw(8)
     << "fail" << std::setw(8) << "skip" << "\n";
  for (const auto& p : s.properties) {
    os << std::left << std::setw(18) << p.name << std::right << std::setw(8) << p.pass << std::setw(8)
       << p.fail << std::setw(8) << p.skip << "\n";
  }
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < std::min(kShown, s.failures.size()); ++i) {
    const auto& f = s.failures[i];
    os << "FAIL trial " << f.trial << " " << f.property << ": " << f.message << "\n";
  }
  if (s.failures.size() > kShown) os << "... " << s.failures.size() - kShown << " more failures\n";
  os << "result: " << (s.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json to_json(const SweepSummary& s) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : s.properties) {
    props.push_back({{"name", p.name}, {"pass", p.pass}, {"fail", p.fail}, {"skip", p.skip}});
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"trial", f.trial}, {"property", f.property}, {"message", f.message}});
  }
  return {{"seed", s.options.seed},     {"trials", s.options.trials}, {"n_min", s.options.n_min},
          {"n_max", s.options.n_max},   {"properties", props},        {"failures", failures},
          {"ok", s.ok()}};
}

}  // namespace slopepoly::app
