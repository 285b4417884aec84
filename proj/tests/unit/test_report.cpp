#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "slopepoly/app/family.hpp"
#include "slopepoly/app/report.hpp"
#include "slopepoly/app/svg.hpp"
#include "slopepoly/app/sweep.hpp"

using namespace slopepoly;
using namespace slopepoly::app;

namespace {

std::string input(const std::string& name) { return std::string(SLOPEPOLY_INPUTS_DIR) + "/" + name; }

SlopesReport slopes(const std::string& name) {
  return analyze_slopes(parse_slopes_input(read_json_file(input(name))), Tolerances{});
}

CyclicReport cyclic(const std::string& name) {
  return analyze_cyclic(parse_cyclic_input(read_json_file(input(name))), Tolerances{});
}

void expect_all_finite(const nlohmann::json& j) {
  if (j.is_number_float()) {
    EXPECT_TRUE(std::isfinite(j.get<double>()));
  } else if (j.is_structured()) {
    for (const auto& v : j) expect_all_finite(v);
  }
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(SlopesReport, Equilateral) {
  const SlopesReport r = slopes("equilateral.json");
  EXPECT_TRUE(r.failed_checks.empty());
  EXPECT_EQ(r.turning.k, 2);
  ASSERT_EQ(r.chart.p.size(), 1u);
  EXPECT_NEAR(r.chart.p[0], 6 * std::sqrt(3.0), 1e-12);
  ASSERT_EQ(r.critical_points.size(), 2u);
  for (const auto& c : r.critical_points) {
    EXPECT_NEAR(std::abs(c.perimeter), std::sqrt(2 * std::abs(r.chart.pi_sum)), 1e-12);
    EXPECT_TRUE(c.agreement);
  }
  EXPECT_NEAR(r.angles_rad[0], kPi / 2, 1e-15);
}

TEST(SlopesReport, TriangleTurningTwo) { EXPECT_EQ(slopes("triangle_k2.json").turning.k, 2); }

TEST(SlopesReport, ExceptionalHasNoCriticalPoints) {
  const SlopesReport r = slopes("exceptional.json");
  EXPECT_TRUE(r.exceptional);
  EXPECT_TRUE(r.critical_points.empty());
  const nlohmann::json j = r;
  EXPECT_TRUE(j.at("exceptional").get<bool>());
  EXPECT_FALSE(j.contains("critical_points"));
}

TEST(SlopesReport, SaddlePentagon) {
  const SlopesReport r = slopes("saddle_pentagon.json");
  ASSERT_EQ(r.critical_points.size(), 2u);
  EXPECT_EQ(r.critical_points[0].mu_eigen, 1);
  EXPECT_EQ(r.critical_points[0].mu_formula, 1);
  EXPECT_EQ(r.critical_points[1].mu_eigen, 1);
  EXPECT_TRUE(r.failed_checks.empty());
}

TEST(CyclicReport, Square) {
  const CyclicReport r = cyclic("square.json");
  EXPECT_EQ(r.e, 4);
  EXPECT_EQ(r.omega, 1);
  EXPECT_NEAR(r.bifurcation_sum, 4.0, 1e-14);
  ASSERT_TRUE(r.dual.has_value());
  EXPECT_NEAR(r.dual->perimeter, 8.0, 1e-13);
  ASSERT_TRUE(r.indices.has_value());
  EXPECT_TRUE(r.indices->identity_holds);
  EXPECT_EQ(r.indices->area_numeric, r.indices->area_formula);
  EXPECT_TRUE(r.failed_checks.empty());
}

TEST(CyclicReport, Pentagram) {
  const CyclicReport r = cyclic("pentagram.json");
  EXPECT_EQ(r.omega, 2);
  EXPECT_NEAR(r.bifurcation_sum, 15.388, 1e-3);
  ASSERT_TRUE(r.indices.has_value());
  EXPECT_EQ(r.indices->area_numeric, 0);
  EXPECT_EQ(r.indices->dual_perimeter, 2);
}

TEST(CyclicReport, BifurcatingWithholdsIndices) {
  const CyclicReport r = cyclic("bifurcating.json");
  EXPECT_TRUE(r.bifurcating);
  EXPECT_FALSE(r.indices.has_value());
  EXPECT_FALSE(r.withheld_reason.empty());
  const nlohmann::json j = r;
  EXPECT_TRUE(j.at("indices").is_null());
  EXPECT_TRUE(r.failed_checks.empty());
}

TEST(ReportJson, RoundTripIsLossless) {
  for (const char* name : {"equilateral.json", "triangle_k2.json", "exceptional.json", "pentagon.json",
                           "saddle_pentagon.json"}) {
    const SlopesReport r = slopes(name);
    const nlohmann::json j = r;
    expect_all_finite(j);
    const SlopesReport back = nlohmann::json::parse(dump(j)).get<SlopesReport>();
    EXPECT_EQ(back, r) << name;
  }
  for (const char* name : {"square.json", "pentagram.json", "bifurcating.json"}) {
    const CyclicReport r = cyclic(name);
    const nlohmann::json j = r;
    expect_all_finite(j);
    const CyclicReport back = nlohmann::json::parse(dump(j)).get<CyclicReport>();
    EXPECT_EQ(back, r) << name;
  }
}

TEST(ReportJson, TolerancesEchoedAndRoundTrip) {
  const Tolerances t = Tolerances{}.scaled(3.0);
  EXPECT_EQ(tolerances_from_json(tolerances_json(t)), t);
  const SlopesReport r = analyze_slopes({{90, 210, 330}}, t);
  EXPECT_EQ(r.tolerances, t);
}

TEST(ReportText, MentionsKeyQuantities) {
  const std::string s = format_text(slopes("equilateral.json"));
  EXPECT_NE(s.find("= 2 pi"), std::string::npos) << s;
  const std::string c = format_text(cyclic("bifurcating.json"));
  EXPECT_NE(c.find("withheld"), std::string::npos) << c;
}

TEST(InputParsing, Errors) {
  EXPECT_NE(error_of([] { parse_json_text("{\"angles_deg\": [1,\n 2,,]}", "x.json"); }).find("x.json:2"),
            std::string::npos);
  EXPECT_NE(error_of([] { read_json_file("/nonexistent/file.json"); }).find("cannot open"), std::string::npos);
  const std::string field =
      error_of([] { parse_slopes_input(nlohmann::json::parse(R"({"angles_deg":[1,2,"x"]})")); });
  EXPECT_NE(field.find("angles_deg[2]"), std::string::npos) << field;
  EXPECT_FALSE(error_of([] { parse_slopes_input(nlohmann::json::parse(R"({"angles":[1,2,3]})")); }).empty());
  EXPECT_FALSE(error_of([] { parse_cyclic_input(nlohmann::json::parse(R"({"radius":-1,"phis_deg":[0,90,180]})")); }).empty());
  EXPECT_FALSE(error_of([] { parse_cyclic_input(nlohmann::json::parse(R"({"radius":1,"phis_deg":[0,90,180],"center":[1]})")); }).empty());
  const CyclicInput c = parse_cyclic_input(nlohmann::json::parse(R"({"radius":2,"phis_deg":[0,90,180]})"));
  EXPECT_EQ(c.center, (Point{0.0, 0.0}));
}

TEST(Family, CrossingBracketsTheRoot) {
  const FamilyTable t = run_family(parse_family_input(read_json_file(input("family_crossing.json"))), 12, {});
  ASSERT_EQ(t.brackets.size(), 1u);
  const FamilyBracket& b = t.brackets[0];
  ASSERT_TRUE(b.root.has_value());
  EXPECT_NEAR(*b.root, 2.0 / 3.0, 1e-7);
  EXPECT_LE(std::abs(b.root_relative_pi), 1e-9);
  for (const FamilyRow& r : t.rows) {
    ASSERT_TRUE(r.valid);
    // t = 8/12 lands on the exceptional system itself
    EXPECT_EQ(r.exists, std::abs(r.relative_pi) > 1e-9) << r.t;
    if (r.exists) {
      EXPECT_EQ(r.area_sign, r.pi_sum > 0 ? 1 : -1);
    }
  }
  EXPECT_TRUE(t.rows.front().area_sign != t.rows.back().area_sign);
}

TEST(Family, StayingPositive) {
  const FamilyTable t = run_family(parse_family_input(read_json_file(input("family_positive.json"))), 10, {});
  EXPECT_TRUE(t.brackets.empty());
  for (const FamilyRow& r : t.rows) {
    EXPECT_TRUE(r.exists);
    EXPECT_GT(r.pi_sum, 0);
    EXPECT_EQ(r.mu_positive, t.rows.front().mu_positive);
    EXPECT_EQ(r.mu_negative, t.rows.front().mu_negative);
  }
}

TEST(Family, EqualEndpointsGiveConstantTable) {
  const FamilyTable t = run_family({{0, 75, 160, 250, 300}, {0, 75, 160, 250, 300}}, 5, {});
  for (const FamilyRow& r : t.rows) {
    EXPECT_EQ(r.pi_sum, t.rows[0].pi_sum);
    EXPECT_EQ(r.mu_positive, t.rows[0].mu_positive);
  }
  EXPECT_THROW(run_family({{0, 75, 160}, {0, 75, 160}}, 0, {}), InputError);
  EXPECT_THROW(parse_family_input(nlohmann::json::parse(R"({"from":{"angles_deg":[0,1,2]},"to":{"angles_deg":[0,1]}})")),
               InputError);
}

TEST(Sweep, EmptyRun) {
  SweepOptions o;
  o.trials = 0;
  const SweepSummary s = run_sweep(o);
  EXPECT_TRUE(s.ok());
  EXPECT_TRUE(s.properties.empty());
  EXPECT_NE(format_text(s).find("no trials"), std::string::npos);
  EXPECT_EQ(sweep_properties().size(), 13u);
}

TEST(Sweep, SmallRunPassesAndIsThreadIndependent) {
  SweepOptions o;
  o.seed = 9;
  o.trials = 60;
  const SweepSummary one = run_sweep(o);
  EXPECT_TRUE(one.ok()) << format_text(one);
  o.threads = 3;
  const SweepSummary three = run_sweep(o);
  EXPECT_EQ(to_json(one).dump(), to_json(three).dump());
  EXPECT_EQ(format_text(one), format_text(three));
}

TEST(Svg, SlopesAndCyclicFigures) {
  const std::string s = render_svg(read_json_file(input("pentagon.json")), {});
  EXPECT_NE(s.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
  EXPECT_NE(s.find("inscribed circle"), std::string::npos);
  const std::string c = render_svg(read_json_file(input("pentagram.json")), {});
  EXPECT_NE(c.find("circumscribed circle"), std::string::npos);
  EXPECT_NE(c.find("dual tangential polygon"), std::string::npos);
  const std::string e = render_svg(read_json_file(input("exceptional.json")), {});
  EXPECT_NE(e.find("exceptional"), std::string::npos);
  EXPECT_THROW(render_svg(nlohmann::json::parse(R"({"foo":1})"), {}), InputError);
}
