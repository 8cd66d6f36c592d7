#include "bmdist/hexagon.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bmdist/errors.hpp"

namespace bmdist::hexagon {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kDomainSlack = 1e-12;

void require_in(const char* what, double x, double lo, double hi) {
  if (!(x >= lo - kDomainSlack && x <= hi + kDomainSlack)) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": argument " << x << " outside [" << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }
}

}  // namespace

double max_slope() { return kSqrt3 / 3.0; }

double hex_regime_boundary() { return kSqrt3 / 5.0; }

double hex_critical_b() {
  // sqrt(384) = 8 sqrt(6)
  return (-10.0 * kSqrt3 + 8.0 * std::sqrt(6.0)) / 14.0;
}

double hex_c(double b) {
  require_in("hex_c", b, 0.0, max_slope());
  return -2.0 * b / (kSqrt3 * b + 3.0);
}

double hex_h(double b) {
  require_in("hex_h", b, 0.0, hex_regime_boundary());
  return (b * b + 4.0 * kSqrt3 * b + 9.0) / (4.0 * b * b + 2.0 * kSqrt3 * b + 6.0);
}

double hex_h_derivative_numerator(double b) { return -7.0 * kSqrt3 * b * b - 30.0 * b + 3.0 * kSqrt3; }

double hex_h_derivative(double b) {
  require_in("hex_h_derivative", b, 0.0, hex_regime_boundary());
  const double root = 2.0 * b * b + kSqrt3 * b + 3.0;
  return hex_h_derivative_numerator(b) / (2.0 * root * root);
}

double hex_sigma(double b, double c) { return (b - kSqrt3) / (2.0 - b * c - kSqrt3 * c); }

double hex_varsigma(double b, double c) { return (3.0 * b + kSqrt3) / (2.0 + b * c + kSqrt3 * c); }

double hex_supporting_slope(double b) {
  require_in("hex_supporting_slope", b, 0.0, max_slope());
  return (3.0 * kSqrt3 * b + 3.0) / (2.0 * (kSqrt3 - b));
}

Vec2 hex_p(double b) {
  require_in("hex_p", b, 0.0, max_slope());
  return {kSqrt3 / (b + kSqrt3), kSqrt3 * b / (b + kSqrt3)};
}

Vec2 hex_q(double c) {
  require_in("hex_q", c, -max_slope(), max_slope());
  return {0.5 * kSqrt3 * c, 0.5 * kSqrt3};
}

FamilyPoint hex_build(double b) {
  require_in("hex_build", b, 0.0, hex_regime_boundary());
  const double c = hex_c(b);
  const Vec2 p = hex_p(b);
  const Vec2 q = hex_q(c);
  return {b, c, p, q, Parallelogram(p, q), hex_h(b)};
}

std::vector<Parallelogram> hex_optimal_positions() {
  return {
      Parallelogram({1.0, 0.0}, {0.0, 0.5 * kSqrt3}),
      Parallelogram({5.0 / 6.0, kSqrt3 / 6.0}, {-1.0 / 6.0, 0.5 * kSqrt3}),
  };
}

std::vector<Mat2> hex_symmetries() {
  std::vector<Mat2> group;
  group.reserve(12);
  for (int k = 0; k < 6; ++k) group.push_back(Mat2::rotation(k * std::numbers::pi / 3.0));
  // Axes through opposite vertices (v0v3, v1v4, v2v5) and through opposite edge midpoints.
  for (int k = 0; k < 6; ++k) group.push_back(Mat2::reflection(k * std::numbers::pi / 6.0));
  return group;
}

std::vector<Parallelogram> hex_symmetry_orbit(const Parallelogram& p) {
  std::vector<Parallelogram> orbit;
  for (const Mat2& g : hex_symmetries()) {
    const Parallelogram image = p.mapped(g);
    bool seen = false;
    for (const auto& q : orbit) {
      if (same_parallelogram(q, image, 1e-9)) {
        seen = true;
        break;
      }
    }
    if (!seen) orbit.push_back(image);
  }
  return orbit;
}

}  // namespace bmdist::hexagon
