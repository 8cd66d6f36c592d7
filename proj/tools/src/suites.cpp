#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "bmdist/errors.hpp"
#include "bmdist/evengon.hpp"
#include "bmdist/hexagon.hpp"
#include "bmdist/parallelogram.hpp"
#include "bmdist/polygon.hpp"
#include "bmdist/strip.hpp"

namespace bmdist::app {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;
constexpr int kAffineImages = 20;

double claim_tol(const SuiteOptions& o, double fallback) { return o.tol.value_or(fallback); }

OracleOptions with_grid(const SuiteOptions& o, int min_grid) {
  OracleOptions opt = o.oracle;
  opt.grid = std::max(opt.grid, min_grid);
  return opt;
}

Mat2 random_map(std::mt19937_64& rng, double max_condition) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> log_cond(0.0, std::log(max_condition));
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  std::bernoulli_distribution flip(0.5);
  const double s1 = std::exp(log_scale(rng));
  const double s2 = s1 / std::exp(log_cond(rng));
  Mat2 m = Mat2::rotation(angle(rng)) * Mat2::scaling(s1, s2) * Mat2::rotation(angle(rng));
  if (flip(rng)) m = m * Mat2::scaling(1.0, -1.0);
  return m;
}

void affine_rows(RunReport& report, int n, const SuiteOptions& o) {
  const OracleOptions opt = with_grid(o, 720);
  const auto c = regular_polygon(n);
  const double base = bm_distance(c, opt).lambda;
  std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(n));
  double worst = 0.0;
  for (int i = 0; i < kAffineImages; ++i) {
    const auto image = transformed(c, random_map(rng, 20.0));
    worst = std::max(worst, std::abs(bm_distance(image, opt).lambda - base));
  }
  report.add_at_most(fmt::format("affine invariance on P{}: max |lambda(A P{}) - lambda(P{})| over {} maps", n, n, n,
                                 kAffineImages),
                     0.0, worst, 2e-4);
}

void hexagon_suite(RunReport& report, const SuiteOptions& o) {
  const auto p6 = regular_polygon(6);
  const auto r = bm_distance(p6, o.oracle);
  report.add_exact("bm_distance(P6) = 3/2", 1.5, r.lambda, claim_tol(o, 1e-5));
  report.add_at_least("every grid cell of P6 is at least 3/2", 1.5, r.grid_lambda, 1e-6);
  report.add_at_least("optimum for P6 touches at >= 4 points", 4.0, static_cast<double>(r.contacts.size()), 0.0);

  using namespace hexagon;
  report.add_exact("h(0) = 3/2", 1.5, hex_h(0.0), 1e-12);
  report.add_exact("h(sqrt3/5) = 3/2", 1.5, hex_h(kSqrt3 / 5), 1e-12);
  report.add_exact("critical point = (-10 sqrt3 + sqrt384)/14", (-10 * kSqrt3 + std::sqrt(384.0)) / 14,
                   hex_critical_b(), 1e-12);
  report.add_exact("critical point ~ 0.1625293", 0.1625293, hex_critical_b(), 1e-7);
  report.add_exact("h at the critical point ~ 1.5224", 1.5224, hex_h(hex_critical_b()), 5e-4);

  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const auto fp = hex_build(hex_regime_boundary() * i / 100.0);
    worst = std::max(worst, std::abs(fp.h - circum_ratio(fp.parallelogram, p6)));
  }
  report.add_at_most("max |h(b) - circum_ratio(P(b), P6)| over 101 samples", 0.0, worst, 1e-9);

  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 10000; ++i) lowest = std::min(lowest, hex_h(hex_regime_boundary() * i / 10000.0));
  report.add_exact("min of h over 10^4 samples = 3/2", 1.5, lowest, 1e-12);

  affine_rows(report, 6, o);
}

void evengon_suite(RunReport& report, const SuiteOptions& o) {
  for (int n : {8, 10, 12, 14, 16, 20}) {
    const auto value = evengon::theorem2_value(n);
    const auto c = regular_polygon(n);
    if (value.kind == evengon::Kind::exact) {
      const auto claim = verify_claim(c, value.value, ClaimMode::exact, claim_tol(o, 1e-5), o.oracle);
      report.rows.push_back({fmt::format("bm_distance(P{}) = {} (exact, 8j+{})", n, format_number(value.value),
                                         n % 8),
                             value.value, claim.computed, claim.tolerance, claim.pass, claim.note});
    } else {
      const auto claim =
          verify_claim(c, value.value, ClaimMode::upper_bound, claim_tol(o, 1e-6), with_grid(o, 720));
      report.rows.push_back({fmt::format("bm_distance(P{}) <= {} (bound, 8j+{})", n, format_number(value.value),
                                         n % 8),
                             value.value, claim.computed, claim.tolerance, claim.pass, claim.note});
      report.add_exact(fmt::format("bm_distance(P{}) attains the bound", n), value.value, claim.computed, 1e-4,
                       claim.note);
    }
  }
  for (int n = 8; n <= 20; n += 2) {
    const auto c = regular_polygon(n);
    report.add_exact(fmt::format("circum_ratio(axis parallelogram, P{}) = closed form", n),
                     evengon::theorem2_value(n).value, circum_ratio(evengon::axis_parallelogram(c), c), 1e-12);
  }
  report.add_exact("closed form at n = 6 agrees with 3/2", 1.5, evengon::theorem2_value(6).value, 1e-12);
  for (int j = 1; j <= 8; ++j) {
    report.add_exact(fmt::format("dist(P4, P{}) = closed form at n = {}", 4 * (2 * j + 1), 8 * j + 4),
                     evengon::theorem2_value(8 * j + 4).value, evengon::dist_pn_phn(4, 2 * j + 1), 1e-12);
  }
  affine_rows(report, 8, o);
}

void transversal_suite(RunReport& report, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> width(0.1, 3.0);
  std::uniform_real_distribution<double> factor(1.0, 5.0);
  constexpr int kInstances = 1000;
  double worst = 0.0;
  int done = 0;
  while (done < kInstances) {
    const double a = angle(rng);
    const Vec2 normal{std::cos(a), std::sin(a)};
    const double h = width(rng);
    const Strip inner(normal, h);
    const Strip outer(normal, h * factor(rng));
    const double b = angle(rng);
    const Vec2 l{std::cos(b), std::sin(b)};
    if (std::abs(dot(normal, l)) < 0.05) continue;
    const auto ratio = transversal_ratio(inner, outer, l);
    worst = std::max(worst, std::abs(ratio.width_ratio - ratio.coordinate_ratio));
    ++done;
  }
  report.add_at_most(fmt::format("width ratio = coordinate ratio on {} random transversals", kInstances), 0.0, worst,
                     1e-10);
}

void positions_suite(RunReport& report, const SuiteOptions& o) {
  const auto p6 = regular_polygon(6);
  const auto positions = hexagon::hex_optimal_positions();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    report.add_count(fmt::format("position {} is inscribed", i + 1), 1, is_inscribed(positions[i], p6, 1e-12) ? 1 : 0);
    report.add_exact(fmt::format("position {} has ratio 3/2", i + 1), 1.5, circum_ratio(positions[i], p6), 1e-12);
  }
  const auto result = bm_distance(p6, o.oracle);
  const auto reps = argmin_orbit(p6, result, 1e-4, o.oracle);
  report.add_count("optimal positions of P6 up to symmetry", 2, static_cast<long>(reps.size()));
  for (std::size_t i = 0; i < positions.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& rep : reps) {
      for (const auto& image : hexagon::hex_symmetry_orbit(positions[i])) {
        nearest = std::min(nearest, hausdorff_distance(rep, image));
      }
    }
    report.add_at_most(fmt::format("oracle finds position {} (Hausdorff distance)", i + 1), 0.0, nearest, 1e-3);
  }
}

void squares_suite(RunReport& report, const SuiteOptions& o) {
  using namespace evengon;
  for (int j = 1; j <= 4; ++j) {
    report.add_exact(fmt::format("beta h(0) = sqrt2 for j = {}", j), kSqrt2, beta_h(j, 0.0), 1e-12);
    report.add_exact(fmt::format("beta h(tan(pi/{})) = sqrt2 for j = {}", 8 * j, j), kSqrt2,
                     beta_h(j, beta_max_b(j)), 1e-12);
    constexpr int kSamples = 10000;
    double interior = std::numeric_limits<double>::infinity();
    for (int i = 1; i < kSamples; ++i) interior = std::min(interior, beta_h(j, beta_max_b(j) * i / kSamples));
    report.rows.push_back({fmt::format("beta h > sqrt2 strictly inside the domain for j = {}", j), kSqrt2, interior,
                           0.0, interior > kSqrt2, {}});
  }
  for (int n : {8, 16}) {
    const auto c = regular_polygon(n);
    const auto reps = argmin_orbit(c, bm_distance(c, o.oracle), 1e-6, o.oracle);
    double side_gap = 0.0;
    double skew = 0.0;
    for (const auto& rep : reps) {
      side_gap = std::max(side_gap, std::abs(norm(rep.u()) - norm(rep.v())));
      skew = std::max(skew, std::abs(dot(rep.u(), rep.v())));
    }
    report.add_at_least(fmt::format("P{} has an optimal position", n), 1.0, static_cast<double>(reps.size()), 0.0);
    report.add_at_most(fmt::format("optimum for P{} has equal sides", n), 0.0, side_gap, 1e-4);
    report.add_at_most(fmt::format("optimum for P{} has a right angle", n), 0.0, skew, 1e-4);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1", "theorem2", "lemma", "remark", "beta", "all"};
  return names;
}

RunReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw DomainError("unknown suite: " + name);
  }
  RunReport report;
  report.command = "verify " + name;
  report.inputs = {{"suite", name},
                   {"grid", std::to_string(options.oracle.grid)},
                   {"refine", options.oracle.refine ? "true" : "false"},
                   {"seed", std::to_string(options.seed)}};
  if (options.tol) report.inputs["tol"] = format_number(*options.tol);

  const auto start = std::chrono::steady_clock::now();
  if (name == "theorem1" || name == "all") hexagon_suite(report, options);
  if (name == "theorem2" || name == "all") evengon_suite(report, options);
  if (name == "lemma" || name == "all") transversal_suite(report, options);
  if (name == "remark" || name == "all") positions_suite(report, options);
  if (name == "beta" || name == "all") squares_suite(report, options);
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace bmdist::app
