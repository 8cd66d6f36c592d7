#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bmdist/errors.hpp"
#include "commands.hpp"
#include "suites.hpp"

namespace {

using bmdist::app::SuiteOptions;

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bmdist::DomainError("cannot open " + path + " for writing");
  body(out);
  if (!out) throw bmdist::DomainError("failed writing " + path);
}

void add_oracle_flags(CLI::App* cmd, SuiteOptions& o, bool& no_refine) {
  cmd->add_option("--grid", o.oracle.grid, "Grid cells per axis")->check(CLI::Range(8, 100000));
  cmd->add_flag("--no-refine", no_refine, "Skip golden-section refinement");
  cmd->add_option("--starts", o.oracle.starts, "Refinement start points")->check(CLI::PositiveNumber);
  cmd->add_option("--shrink", o.oracle.shrink, "Bracket shrink factor per sweep")->check(CLI::Range(0.01, 0.99));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Banach-Mazur distance from the parallelogram to centrally symmetric polygons"};
  app.require_subcommand(1);

  SuiteOptions options;
  bool no_refine = false;
  bool json = false;
  std::string out_path;

  int gen_n = 0;
  auto* gen = app.add_subcommand("gen", "Write the regular n-gon as a polygon file");
  gen->add_option("n", gen_n, "Even vertex count >= 4")->required();
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");

  std::string polygon;
  auto* distance = app.add_subcommand("distance", "Compute the distance for a polygon");
  distance->add_option("polygon", polygon, "Polygon file or Pn")->required();
  distance->add_flag("--json", json, "Emit one JSON record");
  add_oracle_flags(distance, options, no_refine);

  std::string suite;
  std::optional<double> tol;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "theorem1, theorem2, lemma, remark, beta or all")
      ->required()
      ->check(CLI::IsMember(bmdist::app::suite_names()));
  verify->add_option("--tol", tol, "Tolerance for distance claims")->check(CLI::PositiveNumber);
  verify->add_option("--seed", options.seed, "Seed for randomized checks");
  verify->add_flag("--json", json, "Emit JSON records");
  add_oracle_flags(verify, options, no_refine);

  std::string target;
  int j = 1;
  int samples = 101;
  auto* curve = app.add_subcommand("curve", "Sample a width-ratio curve to CSV");
  curve->add_option("target", target, "hexagon or beta")->required()->check(CLI::IsMember({"hexagon", "beta"}));
  curve->add_option("--j", j, "Family index for beta (P_{8j})")->check(CLI::PositiveNumber);
  curve->add_option("--samples", samples, "Number of samples")->check(CLI::Range(2, 10000000));
  curve->add_option("-o,--out", out_path, "Output file (default stdout)");

  std::string b;
  auto* render = app.add_subcommand("render", "Draw a configuration as SVG");
  render->add_option("polygon", polygon, "Polygon file or Pn")->required();
  render->add_option("--b", b, "Family parameter, or \"optimal\"")->required();
  render->add_option("-o,--out", out_path, "Output file (default stdout)");
  add_oracle_flags(render, options, no_refine);

  CLI11_PARSE(app, argc, argv);
  options.oracle.refine = !no_refine;
  options.tol = tol;

  try {
    if (*gen) {
      emit(out_path, [&](std::ostream& out) { bmdist::app::cmd_gen(gen_n, out); });
    } else if (*distance) {
      bmdist::app::cmd_distance(polygon, options.oracle, json, std::cout);
    } else if (*verify) {
      const auto report = bmdist::app::run_suite(suite, options);
      if (json) {
        bmdist::app::print_json(std::cout, report);
      } else {
        bmdist::app::print_text(std::cout, report);
      }
      return report.all_pass() ? 0 : 1;
    } else if (*curve) {
      const auto which = target == "hexagon" ? bmdist::app::CurveTarget::hexagon : bmdist::app::CurveTarget::beta;
      emit(out_path, [&](std::ostream& out) { bmdist::app::cmd_curve(which, j, samples, out); });
    } else if (*render) {
      emit(out_path, [&](std::ostream& out) { bmdist::app::cmd_render(polygon, b, options.oracle, out); });
    }
  } catch (const bmdist::InvalidPolygon& e) {
    std::cerr << "error: invalid polygon (" << e.invariant() << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
