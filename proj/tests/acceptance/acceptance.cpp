// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slopepoly/app/family.hpp"
#include "slopepoly/app/sweep.hpp"
#include "slopepoly/slopepoly.hpp"

using namespace slopepoly;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::vector<double> degrees_of(const SlopeSystem& s) {
  std::vector<double> out;
  for (const auto& d : s.slopes()) out.push_back(d.degrees());
  return out;
}

std::vector<double> phis_deg(const CyclicPolygon& c) {
  std::vector<double> out;
  for (double p : c.phis()) out.push_back(rad_to_deg(p));
  return out;
}

std::vector<oracle::Pt> pts(const PolygonChain& q) {
  std::vector<oracle::Pt> out;
  for (const Vec2& v : q.vertices()) out.push_back({v.x, v.y});
  return out;
}

std::vector<long double> theta_of(const SlopeSystem& s) {
  std::vector<long double> t;
  for (const auto& d : s.slopes()) t.push_back(d.angle());
  return t;
}

std::size_t draw_n(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

long double sum(const std::vector<long double>& v) {
  long double s = 0;
  for (long double x : v) s += x;
  return s;
}

long double abs_sum(const std::vector<long double>& v) {
  long double s = 0;
  for (long double x : v) s += std::abs(x);
  return s;
}

const CriticalPair* pair_of(const CriticalPoints& cp) { return std::get_if<CriticalPair>(&cp); }

std::string trial_tag(std::uint64_t i, const std::vector<double>& deg) {
  std::ostringstream os;
  os.precision(17);
  os << "trial " << i << " [";
  for (std::size_t k = 0; k < deg.size(); ++k) os << (k ? ", " : "") << deg[k];
  os << "]";
  return os.str();
}

// 1. gradient of the perimeter vanishes at both constructed points
Result critical_points() {
  Result res;
  std::size_t checked = 0;
  std::size_t excluded = 0;
  double worst = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = trial_rng(kSeed, i);
    const SlopeSystem s = random_slope_system(rng, draw_n(rng, 4, 9));
    const std::vector<double> deg = degrees_of(s);
    const auto p = oracle::chart_p(deg);
    if (std::abs(sum(p)) < 1e-6L * abs_sum(p)) {
      ++excluded;
      continue;
    }
    try {
      const auto cp = tangential_critical_points(s);
      const CriticalPair* pair = pair_of(cp);
      if (!pair) {
        res.fail(trial_tag(i, deg) + ": classified exceptional");
        continue;
      }
      for (const TangentialCritical* q : {&pair->positive, &pair->negative}) {
        const double g = oracle::fd_perimeter_gradient(p, oracle::radii(q->polygon, deg));
        worst = std::max(worst, g);
        if (!(g < 1e-6)) res.fail(trial_tag(i, deg) + ": gradient " + sci(g));
        ++checked;
      }
    } catch (const std::exception& e) {
      res.fail(trial_tag(i, deg) + ": " + e.what());
    }
  }
  res.detail = std::to_string(checked) + " points (" + std::to_string(excluded) +
               " near-exceptional systems excluded), max finite-difference |grad P| " + sci(worst) + " < 1e-6";
  return res;
}

// 2. closed-form Hessian against central differences
Result hessian_closed_form() {
  Result res;
  double worst = 0;
  std::size_t entries = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = trial_rng(kSeed + 1, i);
    const SlopeSystem s = random_slope_system(rng, draw_n(rng, 4, 8));
    const std::vector<double> deg = degrees_of(s);
    try {
      const auto cp = tangential_critical_points(s);
      const CriticalPair* pair = pair_of(cp);
      if (!pair) continue;
      const auto p = oracle::chart_p(deg);
      for (const TangentialCritical* q : {&pair->positive, &pair->negative}) {
        const auto fd = oracle::fd_perimeter_hessian(p, q->r);
        const double floor = 1e-8 * q->hessian.cwiseAbs().maxCoeff();
        for (Eigen::Index j = 0; j < q->hessian.rows(); ++j) {
          for (Eigen::Index k = 0; k < q->hessian.cols(); ++k) {
            const double exact = q->hessian(j, k);
            const double approx = fd[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            const double rel = std::abs(approx - exact) / std::max(std::abs(exact), floor);
            worst = std::max(worst, rel);
            ++entries;
            if (!(rel < 1e-5)) res.fail(trial_tag(i, deg) + ": entry relative error " + sci(rel));
          }
        }
      }
    } catch (const std::exception& e) {
      res.fail(trial_tag(i, deg) + ": " + e.what());
    }
  }
  res.detail = std::to_string(entries) + " entries over 200 systems, max relative error " + sci(worst) + " < 1e-5";
  return res;
}

// 3. r^{n-3} det H against the product formula
Result determinant_identity() {
  Result res;
  double worst = 0;
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = trial_rng(kSeed + 2, i);
    const SlopeSystem s = random_slope_system(rng, draw_n(rng, 4, 9));
    const std::vector<double> deg = degrees_of(s);
    try {
      const auto cp = tangential_critical_points(s);
      const CriticalPair* pair = pair_of(cp);
      if (!pair) continue;
      const auto p = oracle::chart_p(deg);
      const long double pi_sum = sum(p);
      for (const TangentialCritical* q : {&pair->positive, &pair->negative}) {
        const std::size_t m = static_cast<std::size_t>(q->hessian.rows());
        std::vector<std::vector<long double>> h(m, std::vector<long double>(m));
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t k = 0; k < m; ++k) {
            h[j][k] = q->hessian(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
          }
        }
        const long double lhs = std::pow(static_cast<long double>(q->r), static_cast<int>(m)) * oracle::determinant(h);
        long double rhs = -p[1] * pi_sum / p[0];
        for (std::size_t k = 2; k < p.size(); ++k) rhs *= -p[k];
        const double rel = static_cast<double>(std::abs(lhs - rhs) / std::abs(rhs));
        const double lib = hessian_det_identity(*q).relative_error();
        worst = std::max({worst, rel, lib});
        if (!(rel < 1e-9) || !(lib < 1e-9)) res.fail(trial_tag(i, deg) + ": relative error " + sci(std::max(rel, lib)));
        ++checked;
      }
    } catch (const std::exception& e) {
      res.fail(trial_tag(i, deg) + ": " + e.what());
    }
  }
  res.detail = std::to_string(checked) + " critical points, max relative error " + sci(worst) + " < 1e-9";
  return res;
}

// 4. eigenvalue count equals the index formula; indices of Q and -Q add to n-3
Result index_theorem() {
  Result res;
  std::size_t agree = 0;
  std::size_t degenerate = 0;
  std::size_t exceptional = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = trial_rng(kSeed + 3, i);
    const std::size_t n = draw_n(rng, 4, 9);
    const SlopeSystem s = random_slope_system(rng, n);
    const std::vector<double> deg = degrees_of(s);
    try {
      const auto cp = tangential_critical_points(s);
      const CriticalPair* pair = pair_of(cp);
      if (!pair) {
        ++exceptional;
        continue;
      }
      IndexReport a;
      IndexReport b;
      try {
        a = morse_index_eigen(pair->positive);
        b = morse_index_eigen(pair->negative);
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::DegenerateHessian) throw;
        ++degenerate;
        continue;
      }
      const bool ok = a.mu_eigen == morse_index_formula(pair->positive) &&
                      b.mu_eigen == morse_index_formula(pair->negative) &&
                      a.mu_eigen + b.mu_eigen == static_cast<int>(n) - 3;
      if (ok) {
        ++agree;
      } else {
        res.fail(trial_tag(i, deg) + ": eigen " + std::to_string(a.mu_eigen) + "/" + std::to_string(b.mu_eigen) +
                 " formula " + std::to_string(morse_index_formula(pair->positive)) + "/" +
                 std::to_string(morse_index_formula(pair->negative)));
      }
    } catch (const std::exception& e) {
      res.fail(trial_tag(i, deg) + ": " + e.what());
    }
  }
  res.detail = std::to_string(agree) + " of " + std::to_string(1000 - degenerate - exceptional) +
               " non-degenerate trials agree at both points with mu(Q)+mu(-Q)=n-3 (" + std::to_string(degenerate) +
               " degenerate, " + std::to_string(exceptional) + " exceptional)";
  return res;
}

// 5. convex counterclockwise systems
Result convex_sanity() {
  Result res;
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = trial_rng(kSeed + 4, i);
    const std::size_t n = draw_n(rng, 4, 9);
    const SlopeSystem s = random_convex_slope_system(rng, n);
    try {
      const auto cp = tangential_critical_points(s);
      const CriticalPair* pair = pair_of(cp);
      if (!pair) {
        res.fail(trial_tag(i, degrees_of(s)) + ": exceptional");
        continue;
      }
      const int a = morse_index_eigen(pair->positive).mu_eigen;
      const int b = morse_index_eigen(pair->negative).mu_eigen;
      if (a != 0 || b != static_cast<int>(n) - 3) {
        res.fail(trial_tag(i, degrees_of(s)) + ": indices " + std::to_string(a) + ", " + std::to_string(b));
      }
    } catch (const std::exception& e) {
      res.fail(trial_tag(i, degrees_of(s)) + ": " + e.what());
    }
  }
  res.detail = "300 convex systems, n in [4,9]: index 0 at r>0 and n-3 at r<0";
  return res;
}

// 6. triangles
Result triangles() {
  Result res;
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = trial_rng(kSeed + 5, i);
    const SlopeSystem s = random_slope_system(rng, 3);
    try {
      const auto cp = tangential_critical_points(s);
      const CriticalPair* pair = pair_of(cp);
      if (!pair) {
        res.fail(trial_tag(i, degrees_of(s)) + ": exceptional");
        continue;
      }
      for (const TangentialCritical* q : {&pair->positive, &pair->negative}) {
        const IndexReport r = morse_index_eigen(*q);
        if (q->hessian.size() != 0 || r.mu_eigen != 0 || morse_index_formula(*q) != 0) {
          res.fail(trial_tag(i, degrees_of(s)) + ": nonzero index or nonempty Hessian");
        }
      }
    } catch (const std::exception& e) {
      res.fail(trial_tag(i, degrees_of(s)) + ": " + e.what());
    }
  }
  res.detail = "300 triangles: empty Hessian, eigen and formula index 0 at both points";
  return res;
}

// 7. chart laws, additivity and area = P r / 2 at tangential points
Result chart_laws() {
  Result res;
  double worst = 0;
  auto check = [&](double got, double want, double scale, const std::string& what) {
    const double err = std::abs(got - want) / scale;
    worst = std::max(worst, err);
    if (!(err < 1e-10)) res.fail(what + " off by " + sci(err) + " of scale");
  };
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = trial_rng(kSeed + 6, i);
    const std::size_t n = draw_n(rng, 4, 9);
    const SlopeSystem s = random_slope_system(rng, n);
    const std::vector<double> deg = degrees_of(s);
    const std::string tag = trial_tag(i, deg);
    try {
      const RadiiChart chart = build_chart(s);
      std::uniform_real_distribution<double> u(-2.0, 2.0);
      RadiiPoint pt;
      for (std::size_t k = 0; k < chart.dimension(); ++k) pt.r.push_back(u(rng));
      const PolygonChain q = polygon_from_radii(chart, pt).translated({u(rng), u(rng)});
      double scale_a = 0;
      double scale_p = 0;
      for (std::size_t k = 0; k < pt.r.size(); ++k) {
        scale_a += 0.5 * std::abs(chart.p[k]) * pt.r[k] * pt.r[k];
        scale_p += std::abs(chart.p[k] * pt.r[k]);
      }
      check(static_cast<double>(oracle::shoelace(pts(q))), chart.area(pt), scale_a, tag + " area law");
      check(static_cast<double>(oracle::signed_perimeter(pts(q), theta_of(s))), chart.perimeter(pt), scale_p,
            tag + " perimeter law");

      const auto lines = edge_lines(s, q);
      long double area = 0;
      long double perim = 0;
      for (std::size_t k = 0; k + 2 < n; ++k) {
        const PolygonChain t = decomposition_triangle(lines, k);
        area += oracle::shoelace(pts(t));
        perim += oracle::signed_perimeter(pts(t), {s[0].angle(), s[k + 1].angle(), s[k + 2].angle()});
      }
      check(oriented_area(q), static_cast<double>(area), scale_a, tag + " area additivity");
      check(signed_perimeter(q, s), static_cast<double>(perim), scale_p, tag + " perimeter additivity");

      const auto cp = tangential_critical_points(chart);
      if (const CriticalPair* pair = pair_of(cp)) {
        for (const TangentialCritical* t : {&pair->positive, &pair->negative}) {
          const double a = static_cast<double>(oracle::shoelace(pts(t->polygon)));
          const double p = static_cast<double>(oracle::signed_perimeter(pts(t->polygon), theta_of(s)));
          check(a, 0.5 * p * t->r, std::abs(a), tag + " area = P r / 2");
        }
      }
    } catch (const std::exception& e) {
      res.fail(tag + ": " + e.what());
    }
  }
  res.detail = "500 random evaluations, max error " + sci(worst) + " of scale < 1e-10";
  return res;
}

// 8. signature law, integrality of the turning number, turning-sum recursion
Result signature_topology() {
  Result res;
  double worst_int = 0;
  double worst_rec = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = trial_rng(kSeed + 7, i);
    const std::size_t n = draw_n(rng, 3, 12);
    const SlopeSystem s = random_slope_system(rng, n);
    const std::vector<double> deg = degrees_of(s);
    const std::string tag = trial_tag(i, deg);
    try {
      const oracle::Turning t = oracle::turning(deg);
      const double frac = static_cast<double>(std::abs(t.k_real - t.k));
      worst_int = std::max(worst_int, frac);
      if (!(frac < 1e-9)) res.fail(tag + ": turning sum not integral");
      const auto p = oracle::chart_p(deg);
      const int positive = static_cast<int>(std::count_if(p.begin(), p.end(), [](long double v) { return v > 0; }));
      const RadiiChart chart = build_chart(s);
      const TopologyReport topo = topology_report(s);
      if (positive != t.k - 1 || chart.positive_count != chart.k - 1 || chart.k != t.k || topo.k != t.k) {
        res.fail(tag + ": #{p>0} = " + std::to_string(positive) + ", k = " + std::to_string(t.k));
      }
      if (n >= 4) {
        std::vector<DirectedSlope> head(s.slopes().begin(), s.slopes().end() - 1);
        const double lhs = turning_sum(s).t;
        const double rhs = turning_sum(SlopeSystem(head)).t + turning_sum(SlopeSystem({s[0], s[n - 2], s[n - 1]})).t - kPi;
        worst_rec = std::max(worst_rec, std::abs(lhs - rhs));
        if (!(std::abs(lhs - rhs) < 1e-9)) res.fail(tag + ": recursion off by " + sci(std::abs(lhs - rhs)));
      }
    } catch (const std::exception& e) {
      res.fail(tag + ": " + e.what());
    }
  }
  res.detail = "500 systems, n in [3,12]: #{p>0} = k-1, max non-integrality " + sci(worst_int) +
               ", max recursion error " + sci(worst_rec);
  return res;
}

// 9. dual perimeter = 2 R B; its vanishing coincides with bifurcation
Result duality_perimeter() {
  Result res;
  const Tolerances tol;
  double worst = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = trial_rng(kSeed + 8, i);
    const CyclicPolygon c = random_cyclic_polygon(rng, draw_n(rng, 3, 9));
    const std::string tag = trial_tag(i, phis_deg(c));
    try {
      const oracle::Cyclic o = oracle::cyclic({c.center().x, c.center().y}, c.radius(), phis_deg(c));
      const long double expected = 2 * c.radius() * o.b;
      const DualPolygon d = dual_polygon(c);
      const long double brute = oracle::dual_perimeter({c.center().x, c.center().y}, c.radius(), phis_deg(c));
      const double rel = static_cast<double>(
          std::max(std::abs(d.perimeter - expected), std::abs(brute - expected)) / std::abs(expected));
      worst = std::max(worst, rel);
      if (!(rel < 1e-9)) res.fail(tag + ": relative error " + sci(rel));
      const double tan_sum = cyclic_invariants(c).tan_sum;
      const bool vanishes = std::abs(d.perimeter) < tol.bifurcation * 2 * c.radius() * tan_sum;
      if (vanishes != bifurcation_test(c)) res.fail(tag + ": vanishing and bifurcation disagree");
    } catch (const std::exception& e) {
      res.fail(tag + ": " + e.what());
    }
  }

  // bifurcating polygons: roots of B along the last vertex angle
  std::size_t roots = 0;
  for (std::uint64_t i = 0; i < 400 && roots < 30; ++i) {
    auto rng = trial_rng(kSeed + 9, i);
    const CyclicPolygon base = random_cyclic_polygon(rng, draw_n(rng, 4, 7));
    std::vector<double> phis = phis_deg(base);
    const Vec2 center = base.center();
    const double radius = base.radius();
    auto b_of = [&](double t) {
      phis.back() = t;
      return static_cast<double>(oracle::cyclic({center.x, center.y}, radius, phis).b);
    };
    const double start = phis.back();
    double lo = start;
    double b_lo = b_of(lo);
    for (int step = 1; step <= 360; ++step) {
      const double hi = start + step;
      const double b_hi = b_of(hi);
      if (b_lo * b_hi < 0 && std::abs(b_lo) < 20 && std::abs(b_hi) < 20) {
        double a = lo;
        double b = hi;
        for (int it = 0; it < 200 && b - a > 1e-14 * std::abs(b); ++it) {
          const double mid = 0.5 * (a + b);
          (b_of(mid) * b_of(a) > 0 ? a : b) = mid;
        }
        const double root = std::abs(b_of(a)) < std::abs(b_of(b)) ? a : b;
        phis.back() = root;
        try {
          const CyclicPolygon c = CyclicPolygon::from_degrees(center, radius, phis);
          const double tan_sum = cyclic_invariants(c).tan_sum;
          const DualPolygon d = dual_polygon(c);
          const bool vanishes = std::abs(d.perimeter) < tol.bifurcation * 2 * radius * tan_sum;
          bool degenerate = false;
          try {
            (void)area_morse_index_numeric(c);
          } catch (const GeometryError& e) {
            degenerate = e.code() == ErrorCode::DegenerateCritical;
          }
          if (!vanishes || !bifurcation_test(c) || !degenerate) {
            res.fail(trial_tag(i, phis) + ": bifurcating polygon not flagged consistently (vanishes " +
                     std::to_string(vanishes) + ", test " + std::to_string(bifurcation_test(c)) + ", degenerate " +
                     std::to_string(degenerate) + ")");
          }
          ++roots;
        } catch (const GeometryError&) {
          // the root sits on a coincident or antipodal configuration
        }
        break;
      }
      lo = hi;
      b_lo = b_hi;
    }
  }
  if (roots < 10) res.fail("only " + std::to_string(roots) + " bifurcating polygons found");
  res.detail = "500 polygons, max relative error of P(P*) vs 2RB " + sci(worst) + " < 1e-9; " +
               std::to_string(roots) + " root-found bifurcating polygons flagged by all three tests";
  return res;
}

// 10. cyclic area index and index duality
Result cyclic_index() {
  Result res;
  std::size_t stars = 0;
  std::size_t oracle_checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = trial_rng(kSeed + 10, i);
    const std::size_t n = draw_n(rng, 4, 7);
    const CyclicPolygon c = random_cyclic_polygon(rng, n);
    const std::string tag = trial_tag(i, phis_deg(c));
    try {
      const int numeric = area_morse_index_numeric(c);
      const int formula = area_morse_index_formula(c);
      if (numeric != formula) res.fail(tag + ": numeric " + std::to_string(numeric) + " formula " + std::to_string(formula));
      if (const auto o = oracle::area_index(pts(c.polygon()))) {
        ++oracle_checked;
        if (*o != numeric) res.fail(tag + ": finite-difference index " + std::to_string(*o));
      }
      const DualityReport d = duality_index_check(c);
      if (!d.identity_holds || d.mu_area_numeric != static_cast<int>(n) - 3 - d.mu_dual_perimeter) {
        res.fail(tag + ": duality identity fails");
      }
      if (std::abs(cyclic_invariants(c).omega) >= 2) ++stars;
    } catch (const std::exception& e) {
      res.fail(tag + ": " + e.what());
    }
  }
  if (stars < 20) res.fail("only " + std::to_string(stars) + " polygons with winding >= 2");
  res.detail = "200 polygons, n in [4,7], " + std::to_string(stars) +
               " with winding >= 2: numeric = formula, identity holds; " + std::to_string(oracle_checked) +
               " confirmed by a finite-difference index";
  return res;
}

// 11. critical points on both sides of a sign change of Pi and none at the root
Result exceptional_family() {
  Result res;
  const Tolerances tol;
  std::vector<app::FamilyInput> families{{{0, 60, 200, 120}, {0, 60, 200, 150}}};
  for (std::uint64_t i = 0; families.size() < 6 && i < 500; ++i) {
    auto rng = trial_rng(kSeed + 11, i);
    const std::size_t n = draw_n(rng, 4, 7);
    const SlopeSystem a = random_slope_system(rng, n);
    const SlopeSystem b = random_slope_system(rng, n);
    const double pa = build_chart(a).pi_sum;
    const double pb = build_chart(b).pi_sum;
    if (pa * pb < 0) families.push_back({degrees_of(a), degrees_of(b)});
  }
  std::size_t roots = 0;
  for (const auto& fam : families) {
    const app::FamilyTable table = app::run_family(fam, 24, tol);
    for (const auto& br : table.brackets) {
      if (br.singular || !br.root) continue;
      ++roots;
      const double delta = 1e-6 * std::max(1.0, br.t_hi - br.t_lo);
      const app::FamilyRow lo = app::evaluate_family(fam, *br.root - delta, tol);
      const app::FamilyRow hi = app::evaluate_family(fam, *br.root + delta, tol);
      const app::FamilyRow at = app::evaluate_family(fam, *br.root, tol);
      if (!lo.exists || !hi.exists) {
        res.fail(trial_tag(0, fam.from_deg) + " -> " + trial_tag(0, fam.to_deg) +
                 ": no critical points next to the root " + std::to_string(*br.root));
      }
      if (lo.area_sign == hi.area_sign) res.fail("area sign does not flip across the root");
      if (at.exists || !(std::abs(at.relative_pi) <= tol.exceptional)) res.fail("critical points inside the band");
    }
    for (const auto& row : table.rows) {
      if (row.valid && row.exists != (std::abs(row.relative_pi) > tol.exceptional)) {
        res.fail("existence does not follow the sign of Pi");
      }
    }
  }
  if (roots < 3) res.fail("only " + std::to_string(roots) + " exceptional roots bracketed");
  res.detail = std::to_string(families.size()) + " families, " + std::to_string(roots) +
               " roots bracketed: critical points at root -+ 1e-6, none in the band |Pi| <= 1e-9 sum|p|";
  return res;
}

// 12. sweep reports are byte-identical across runs and thread counts
Result determinism() {
  Result res;
  app::SweepOptions opt;
  opt.seed = 1;
  opt.trials = 1000;
  opt.n_min = 4;
  opt.n_max = 9;
  const app::SweepSummary a = app::run_sweep(opt);
  const app::SweepSummary b = app::run_sweep(opt);
  opt.threads = 4;
  const app::SweepSummary c = app::run_sweep(opt);
  const std::string ja = app::to_json(a).dump(2);
  const std::string ta = app::format_text(a);
  if (ja != app::to_json(b).dump(2) || ta != app::format_text(b)) res.fail("rerun differs");
  if (ja != app::to_json(c).dump(2) || ta != app::format_text(c)) res.fail("4 threads differ from 1");
  if (!a.ok()) res.fail(std::to_string(a.failures.size()) + " sweep property failures");
  res.detail = "seed 1, 1000 trials, n in [4,9]: identical bytes for 2 runs and 1 vs 4 threads; all properties " +
               std::string(a.ok() ? "pass" : "FAIL");
  return res;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Result()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "critical-point construction", critical_points},
      {2, "Hessian closed form", hessian_closed_form},
      {3, "determinant identity", determinant_identity},
      {4, "index theorem", index_theorem},
      {5, "convex sanity", convex_sanity},
      {6, "triangles", triangles},
      {7, "chart laws", chart_laws},
      {8, "signature and topology", signature_topology},
      {9, "duality perimeter", duality_perimeter},
      {10, "cyclic index", cyclic_index},
      {11, "exceptional family", exceptional_family},
      {12, "sweep determinism", determinism},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      selected.push_back(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::cerr << "usage: " << argv[0] << " [criterion ...]\n";
      return 2;
    }
  }

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char head[96];
    std::snprintf(head, sizeof head, "%-4s %2d  %-28s (%5.2fs)  ", r.pass ? "PASS" : "FAIL", c.id, c.name, secs);
    std::cout << head << r.detail << "\n";
    for (const auto& f : r.failures) std::cout << "        " << f << "\n";
    failed += r.pass ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s: %d failed, %.2fs total\n", failed ? "FAIL" : "PASS", failed, total);
  return failed ? 1 : 0;
}
