#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bmdist/errors.hpp"
#include "bmdist/polygon_io.hpp"
#include "commands.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace bmdist::app {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string value_of(const std::string& text, const std::string& key) {
  for (const auto& line : lines_of(text)) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return {};
}

TEST(Gen, HexagonFile) {
  std::ostringstream out;
  cmd_gen(6, out);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines.front(), "1,0");
  EXPECT_EQ(parse_polygon(out.str()).size(), 6u);
}

TEST(Gen, DodecagonOnUnitCircle) {
  std::ostringstream out;
  cmd_gen(12, out);
  const auto c = parse_polygon(out.str());
  ASSERT_EQ(c.size(), 12u);
  for (const auto& v : c.vertices()) EXPECT_NEAR(norm(v), 1.0, 1e-15);
}

TEST(Gen, RejectsOdd) {
  std::ostringstream out;
  EXPECT_THROW(cmd_gen(7, out), DomainError);
}

TEST(LoadPolygon, ShorthandAndFile) {
  EXPECT_EQ(regular_order("P12"), 12);
  EXPECT_FALSE(regular_order("P").has_value());
  EXPECT_FALSE(regular_order("P6x").has_value());
  EXPECT_FALSE(regular_order("hex.txt").has_value());
  EXPECT_EQ(load_polygon("P8").size(), 8u);

  const auto path = std::filesystem::temp_directory_path() / "bmdist_cli_test_square.txt";
  {
    std::ofstream f(path);
    f << "# a square\n1,0\n0,1\n-1,0\n0,-1\n";
  }
  EXPECT_EQ(load_polygon(path.string()).size(), 4u);
  {
    std::ofstream f(path);
    f << "1,0\n0,1\n-1,0\n0,-2\n";
  }
  try {
    load_polygon(path.string());
    ADD_FAILURE() << "expected InvalidPolygon";
  } catch (const InvalidPolygon& e) {
    EXPECT_EQ(e.invariant(), "central symmetry");
  }
  std::filesystem::remove(path);
}

TEST(Distance, HexagonRecord) {
  std::ostringstream out;
  cmd_distance("P6", OracleOptions{}, false, out);
  EXPECT_NEAR(std::stod(value_of(out.str(), "lambda")), 1.5, 1e-9);
  EXPECT_EQ(value_of(out.str(), "grid"), "360");
  EXPECT_EQ(value_of(out.str(), "refined"), "true");
  EXPECT_GE(std::stoi(value_of(out.str(), "contacts")), 4);
  EXPECT_EQ(value_of(out.str(), "note"), "");
}

TEST(Distance, OctagonRecord) {
  std::ostringstream out;
  cmd_distance("P8", OracleOptions{}, false, out);
  EXPECT_EQ(value_of(out.str(), "lambda"), "1.41421356");
}

TEST(Distance, DecagonCarriesConjectureNote) {
  std::ostringstream out;
  OracleOptions opt;
  opt.grid = 720;
  cmd_distance("P10", opt, false, out);
  EXPECT_EQ(value_of(out.str(), "lambda"), "1.42705098");
  EXPECT_EQ(value_of(out.str(), "note"), "conjecture support");

  std::ostringstream json;
  cmd_distance("P10", opt, true, json);
  EXPECT_NE(json.str().find("\"note\":\"conjecture support\""), std::string::npos);
  EXPECT_EQ(lines_of(json.str()).size(), 1u);
}

TEST(Report, NineSignificantDigits) {
  EXPECT_EQ(format_number(std::numbers::sqrt2), "1.41421356");
  EXPECT_EQ(format_number(1.5), "1.5");
  EXPECT_EQ(format_number(-0.0), "0");
}

TEST(Report, RowsAndExitSemantics) {
  RunReport r;
  r.add_exact("a", 1.0, 1.0 + 1e-7, 1e-6);
  r.add_at_most("b", 1.0, 1.0 + 1e-7, 1e-6);
  EXPECT_TRUE(r.all_pass());
  r.add_at_least("c", 2.0, 1.0, 0.5);
  EXPECT_FALSE(r.all_pass());
  std::ostringstream text;
  print_text(text, r);
  EXPECT_NE(text.str().find("FAIL: c"), std::string::npos);
  EXPECT_NE(text.str().find("passed: 2/3"), std::string::npos);
}

TEST(Verify, HexagonSuitePasses) {
  const auto report = run_suite("theorem1", SuiteOptions{});
  EXPECT_TRUE(report.all_pass());
  for (const auto& row : report.rows) EXPECT_TRUE(std::isfinite(row.tolerance)) << row.claim;
}

TEST(Verify, EvenGonSuiteRowsAndLabels) {
  const auto report = run_suite("theorem2", SuiteOptions{});
  EXPECT_TRUE(report.all_pass());
  int conjecture_rows = 0;
  for (const auto& row : report.rows) conjecture_rows += row.note == "conjecture support";
  EXPECT_EQ(conjecture_rows, 4);  // P10 and P14, bound and gap rows
  for (int n : {8, 10, 12, 14, 16, 20}) {
    const std::string prefix = "bm_distance(P" + std::to_string(n) + ")";
    bool found = false;
    for (const auto& row : report.rows) found = found || row.claim.rfind(prefix, 0) == 0;
    EXPECT_TRUE(found) << n;
  }
}

TEST(Verify, TransversalSuiteIsSeededAndDeterministic) {
  SuiteOptions opt;
  opt.seed = 5;
  const auto a = run_suite("lemma", opt);
  const auto b = run_suite("lemma", opt);
  ASSERT_EQ(a.rows.size(), 1u);
  EXPECT_TRUE(a.rows[0].pass);
  EXPECT_EQ(a.rows[0].computed, b.rows[0].computed);
}

TEST(Verify, PositionAndSquareSuitesPass) {
  EXPECT_TRUE(run_suite("remark", SuiteOptions{}).all_pass());
  EXPECT_TRUE(run_suite("beta", SuiteOptions{}).all_pass());
}

TEST(Verify, WrongClaimFailsInsteadOfThrowing) {
  SuiteOptions opt;
  opt.tol = 1e-30;
  opt.oracle.grid = 12;
  opt.oracle.refine = false;
  const auto report = run_suite("theorem2", opt);
  EXPECT_FALSE(report.all_pass());
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("theorem3", SuiteOptions{}), DomainError); }

TEST(Curve, HexagonFile) {
  std::ostringstream out;
  cmd_curve(CurveTarget::hexagon, 1, 101, out);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 102u);
  EXPECT_EQ(lines[0], "b,h,h_geometric");
  EXPECT_EQ(lines[1].rfind("0,1.5,", 0), 0u);
  EXPECT_NEAR(std::stod(lines[1].substr(6)), 1.5, 1e-12);
  double worst = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string b, h, g;
    std::getline(row, b, ',');
    std::getline(row, h, ',');
    std::getline(row, g, ',');
    worst = std::max(worst, std::abs(std::stod(h) - std::stod(g)));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Curve, BetaEndpoints) {
  std::ostringstream out;
  cmd_curve(CurveTarget::beta, 1, 11, out);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 12u);
  for (const auto& line : {lines[1], lines[11]}) {
    const auto h = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(h, std::numbers::sqrt2, 1e-12);
  }
  EXPECT_THROW(cmd_curve(CurveTarget::beta, 0, 11, out), DomainError);
  EXPECT_THROW(cmd_curve(CurveTarget::hexagon, 1, 1, out), DomainError);
}

TEST(Render, HexagonFirstPosition) {
  std::ostringstream a;
  std::ostringstream b;
  cmd_render("P6", "0", OracleOptions{}, a);
  cmd_render("P6", "0", OracleOptions{}, b);
  EXPECT_EQ(a.str(), b.str());
  const std::string svg = a.str();
  EXPECT_NE(svg.find("class=\"inscribed\" points=\"1.000000,0.000000 0.000000,0.866025"), std::string::npos);
  EXPECT_NE(svg.find("class=\"circumscribed\" points=\"1.500000,0.000000"), std::string::npos);
  EXPECT_NE(svg.find("viewBox="), std::string::npos);
}

TEST(Render, OptimalShowsTwoConfigurations) {
  std::ostringstream out;
  cmd_render("P6", "optimal", OracleOptions{}, out);
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = out.str().find("class=\"inscribed\"", pos)) != std::string::npos; ++pos) ++count;
  EXPECT_EQ(count, 2u);
}

TEST(Render, BadArguments) {
  std::ostringstream out;
  EXPECT_THROW(cmd_render("P10", "0.1", OracleOptions{}, out), DomainError);
  EXPECT_THROW(cmd_render("P6", "abc", OracleOptions{}, out), DomainError);
  EXPECT_THROW(cmd_render("P6", "0.5", OracleOptions{}, out), DomainError);
}

}  // namespace
}  // namespace bmdist::app
