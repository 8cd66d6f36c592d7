#pragma once

// Test-only reference computations. Nothing here calls into the gauge /
// circum_ratio code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "bmdist/polygon.hpp"
#include "bmdist/vec2.hpp"

namespace bmdist::testing {

// Is x inside the filled parallelogram with vertices u, v, -u, -v, using
// half-plane tests against its four edges?
inline bool inside_parallelogram(const Vec2& u, const Vec2& v, const Vec2& x, double slack = 0.0) {
  const Vec2 corners[4] = {u, v, -u, -v};
  for (int i = 0; i < 4; ++i) {
    const Vec2 a = corners[i];
    const Vec2 b = corners[(i + 1) % 4];
    const Vec2 e = b - a;
    if (cross(e, x - a) < -slack * norm(e)) return false;
  }
  return true;
}

// Smallest lambda with every point inside lambda * P, by bisection on
// half-plane containment.
inline double bisection_circum_ratio(const Vec2& u, const Vec2& v, const std::vector<Vec2>& points) {
  double lo = 0.0;
  double hi = 1.0;
  auto contains_all = [&](double lam) {
    return std::all_of(points.begin(), points.end(),
                       [&](const Vec2& x) { return inside_parallelogram(lam * u, lam * v, x); });
  };
  while (!contains_all(hi)) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (contains_all(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

inline std::vector<Vec2> vertex_list(const CentralPolygon& c) { return {c.vertices().begin(), c.vertices().end()}; }

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Random strictly convex centrally symmetric polygon with 2m vertices: m edge
// directions drawn in [0, pi), their negatives appended, edges chained in
// angular order and the result centred.
inline CentralPolygon random_central_polygon(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> length(0.3, 1.5);
  std::vector<double> angles;
  while (static_cast<int>(angles.size()) < m) {
    const double a = angle(rng);
    const bool far = std::all_of(angles.begin(), angles.end(), [&](double b) {
      return std::abs(a - b) > 0.05 && std::abs(std::abs(a - b) - std::numbers::pi) > 0.05;
    });
    if (far) angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  std::vector<Vec2> edges;
  for (double a : angles) edges.push_back(length(rng) * Vec2{std::cos(a), std::sin(a)});
  for (int i = 0; i < m; ++i) edges.push_back(-edges[static_cast<std::size_t>(i)]);

  std::vector<Vec2> pts{{0.0, 0.0}};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) pts.push_back(pts.back() + edges[i]);
  Vec2 centre{0.0, 0.0};
  for (const auto& p : pts) centre += p;
  centre = centre / static_cast<double>(pts.size());
  for (auto& p : pts) p -= centre;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) pts[i + m] = -pts[i];
  return CentralPolygon::from_vertices(std::move(pts));
}

// Random linear map R(a) diag(s1, s2) R(b), optionally composed with a
// reflection, with condition number s1/s2 <= max_condition.
inline Mat2 random_linear_map(std::mt19937_64& rng, double max_condition) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> log_cond(0.0, std::log(max_condition));
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  std::bernoulli_distribution flip(0.5);
  const double s1 = std::exp(log_scale(rng));
  const double s2 = s1 / std::exp(log_cond(rng));
  Mat2 m = Mat2::rotation(angle(rng)) * Mat2::scaling(s1, s2) * Mat2::rotation(angle(rng));
  if (flip(rng)) m = m * Mat2::scaling(1.0, -1.0);
  return m;
}

}  // namespace bmdist::testing
