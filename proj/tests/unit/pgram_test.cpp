#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bmdist/balance.hpp"
#include "bmdist/errors.hpp"
#include "bmdist/oracle.hpp"
#include "bmdist/parallelogram.hpp"
#include "bmdist/polygon.hpp"
#include "oracles.hpp"

namespace bmdist {
namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kSqrt2 = std::numbers::sqrt2;

TEST(Gauge, Examples) {
  const Parallelogram unit({1, 0}, {0, 1});
  EXPECT_DOUBLE_EQ(gauge(unit, {1, 1}), 2.0);
  EXPECT_DOUBLE_EQ(gauge(unit, {0.5, 0}), 0.5);
  const Parallelogram hex_first({1, 0}, {0, kSqrt3 / 2});
  EXPECT_NEAR(gauge(hex_first, {0.5, kSqrt3 / 2}), 1.5, 1e-15);
}

TEST(Gauge, RejectsDegenerateParallelogram) {
  EXPECT_THROW(Parallelogram({1, 0}, {2, 0}), DomainError);
  EXPECT_THROW(Parallelogram({1, 0}, {0, -1}), DomainError);
  EXPECT_THROW(Parallelogram({1, 0}, {1, 1e-13}), DomainError);
}

TEST(Gauge, NormLikeProperties) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> scalar(-5.0, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec2 u{coord(rng), coord(rng)};
    const Vec2 v{coord(rng), coord(rng)};
    if (cross(u, v) < 0.05) continue;
    const Parallelogram p(u, v);
    EXPECT_EQ(gauge(p, u), 1.0);
    EXPECT_EQ(gauge(p, v), 1.0);
    const Vec2 w1{coord(rng), coord(rng)};
    const Vec2 w2{coord(rng), coord(rng)};
    const double t = scalar(rng);
    EXPECT_NEAR(gauge(p, t * w1), std::abs(t) * gauge(p, w1), 1e-9 * (1 + std::abs(t) * gauge(p, w1)));
    EXPECT_LE(gauge(p, w1 + w2), gauge(p, w1) + gauge(p, w2) + 1e-9);
    // gauge <= 1 iff inside, checked with half-plane tests.
    const double g = gauge(p, w1);
    if (std::abs(g - 1.0) > 1e-9) EXPECT_EQ(g < 1.0, testing::inside_parallelogram(u, v, w1)) << g;
  }
}

TEST(CircumRatio, Examples) {
  EXPECT_NEAR(circum_ratio(Parallelogram({1, 0}, {0, kSqrt3 / 2}), regular_polygon(6)), 1.5, 1e-15);
  EXPECT_DOUBLE_EQ(circum_ratio(Parallelogram({1, 0}, {0, 1}), regular_polygon(4)), 1.0);
  EXPECT_NEAR(circum_ratio(Parallelogram({1, 0}, {0, 1}), regular_polygon(8)), kSqrt2, 1e-15);
}

TEST(CircumRatio, AgreesWithBisectionOracle) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> param(0.0, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::random_central_polygon(rng, 2 + trial % 6);
    const double m = static_cast<double>(c.half());
    const double t1 = param(rng);
    const double t2 = t1 + 0.05 * m + std::fmod(param(rng), 0.9 * m);
    const Parallelogram p(boundary_point(c, t1), boundary_point(c, t2));
    const double expected = testing::bisection_circum_ratio(p.u(), p.v(), testing::vertex_list(c));
    EXPECT_NEAR(circum_ratio(p, c), expected, 1e-9 * expected);
  }
}

TEST(CircumRatio, HomogeneousAndAtLeastOneForInscribed) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> param(0.0, 10.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::random_central_polygon(rng, 2 + trial % 5);
    const double m = static_cast<double>(c.half());
    const double t1 = param(rng);
    const double t2 = t1 + 0.02 * m + std::fmod(param(rng), 0.96 * m);
    const Parallelogram p(boundary_point(c, t1), boundary_point(c, t2));
    const double lam = circum_ratio(p, c);
    EXPECT_TRUE(is_inscribed(p, c));
    EXPECT_GE(lam, 1.0 - 1e-12);
    if (c.size() > 4) {
      EXPECT_GT(lam, 1.0 + 1e-9);
    }
    const double s = scale(rng);
    EXPECT_NEAR(circum_ratio(p.scaled(s), c), lam / s, 1e-12 * lam / s);
  }
}

TEST(IsInscribed, Examples) {
  const auto p6 = regular_polygon(6);
  const auto p4 = regular_polygon(4);
  EXPECT_TRUE(is_inscribed(Parallelogram({1, 0}, {0, kSqrt3 / 2}), p6, 1e-9));
  EXPECT_FALSE(is_inscribed(Parallelogram({0.5, 0}, {0, 0.5}), p4, 1e-9));
  EXPECT_TRUE(is_inscribed(Parallelogram({1, 0}, {0, 1}), p4, 1e-9));
  EXPECT_FALSE(is_inscribed(Parallelogram({1.1, 0}, {0, 1}), p4, 1e-9));
}

TEST(IsCircumscribed, Examples) {
  const auto p6 = regular_polygon(6);
  const auto p4 = regular_polygon(4);
  EXPECT_TRUE(is_circumscribed(Parallelogram({1, 0}, {0, kSqrt3 / 2}).scaled(1.5), p6, 1e-9));
  EXPECT_FALSE(is_circumscribed(Parallelogram({2, 0}, {0, 2}), p4, 1e-9));
  EXPECT_TRUE(is_circumscribed(Parallelogram({1, 0}, {0, 1}), p4, 1e-9));
  // Touching is not enough when C sticks out.
  EXPECT_FALSE(is_circumscribed(Parallelogram({1, 0}, {0, kSqrt3 / 2}), p6, 1e-9));
}

TEST(Hausdorff, BasicCases) {
  const Parallelogram a({1, 0}, {0, 1});
  EXPECT_DOUBLE_EQ(hausdorff_distance(a, a), 0.0);
  EXPECT_NEAR(hausdorff_distance(a, a.scaled(2.0)), 1.0, 1e-15);
  EXPECT_NEAR(hausdorff_distance(a, Parallelogram({0, 1}, {-1, 0})), 0.0, 1e-15);
  EXPECT_TRUE(same_parallelogram(a, Parallelogram({0, 1}, {-1, 0}), 1e-15));
}

TEST(BalanceInscribed, HexagonThroughVertexZero) {
  const auto p6 = regular_polygon(6);
  const auto report = balance_inscribed(p6, 0.0);
  EXPECT_NEAR(report.parallelogram.v().x, 0.0, 1e-9);
  EXPECT_NEAR(report.parallelogram.v().y, kSqrt3 / 2, 1e-9);
  EXPECT_NEAR(report.ratio, 1.5, 1e-9);
  EXPECT_LE(report.residual, 1e-9);
  // An asymmetric arc around the same balance point.
  const auto lopsided = balance_inscribed(p6, 0.3, 2.9, 0.0);
  EXPECT_NEAR(lopsided.arc_parameter, 1.5, 1e-8);
  EXPECT_NEAR(lopsided.ratio, 1.5, 1e-9);
}

TEST(BalanceInscribed, SquareBalancesAtAdjacentVertex) {
  const auto report = balance_inscribed(regular_polygon(4), 0.0);
  EXPECT_NEAR(report.arc_parameter, 1.0, 1e-9);
  EXPECT_NEAR(report.ratio, 1.0, 1e-9);
}

TEST(BalanceInscribed, RandomPolygonsGiveCircumscribedCopy) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> param(0.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testing::random_central_polygon(rng, 2 + trial % 7);
    const double fixed = param(rng);
    const double m = static_cast<double>(c.half());
    const double lo = fixed + 1e-3;
    const double hi = fixed + m - 1e-3;
    const auto report = balance_inscribed(c, lo, hi, fixed);
    EXPECT_LE(report.residual, 1e-9);
    EXPECT_TRUE(is_inscribed(report.parallelogram, c, 1e-9));
    EXPECT_TRUE(is_circumscribed(report.parallelogram.scaled(report.ratio), c, 1e-8));
    EXPECT_GE(report.ratio, 1.0);
    const double endpoint_max =
        std::max(inscribed_objective(c, fixed, lo), inscribed_objective(c, fixed, hi));
    EXPECT_LE(report.ratio, endpoint_max + 1e-9);
  }
}

TEST(BalanceInscribed, Errors) {
  const auto p6 = regular_polygon(6);
  // Both ends left of the balance point: no sign change.
  EXPECT_THROW(balance_inscribed(p6, 0.2, 1.0, 0.0), ConvergenceError);
  EXPECT_THROW(balance_inscribed(p6, 1.0, 0.5, 0.0), DomainError);
  EXPECT_THROW(balance_inscribed(p6, 0.0, 2.0, 0.0), DomainError);
  EXPECT_THROW(balance_inscribed(p6, 1.0, 3.0, 0.0), DomainError);
}

}  // namespace
}  // namespace bmdist
