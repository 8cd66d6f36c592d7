#include "bmdist/evengon.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bmdist/errors.hpp"

namespace bmdist::evengon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_j(const char* what, int j) {
  if (j < 1) throw DomainError(std::string(what) + ": j must be >= 1, got " + std::to_string(j));
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::k8j: return "8j";
    case Family::k8j2: return "8j+2";
    case Family::k8j4: return "8j+4";
    case Family::k8j6: return "8j+6";
  }
  return "?";
}

std::string_view to_string(Kind k) { return k == Kind::exact ? "exact" : "upper_bound"; }

EvenGonValue theorem2_value(int n) {
  if (n < 6 || n % 2 != 0) {
    throw DomainError("theorem2_value: n must be even and >= 6, got " + std::to_string(n));
  }
  const int j = n / 8;
  const double nd = n;
  switch (n % 8) {
    case 0:
      return {n, j, Family::k8j, Kind::exact, kSqrt2};
    case 2: {
      const double a = 2.0 * j * kPi / nd;
      return {n, j, Family::k8j2, Kind::upper_bound, 0.5 / std::cos(a) + std::cos(a)};
    }
    case 4:
      return {n, j, Family::k8j4, Kind::exact, kSqrt2 * std::cos(kPi / nd)};
    default: {
      const double a = (2.0 * j + 2.0) * kPi / nd;
      const double b = (4.0 * j + 2.0) * kPi / nd;
      return {n, j, Family::k8j6, Kind::upper_bound, std::sin(a) / std::sin(b) + std::cos(a)};
    }
  }
}

Parallelogram axis_parallelogram(const CentralPolygon& c) {
  return {ray_boundary_point(c, {1.0, 0.0}), ray_boundary_point(c, {0.0, 1.0})};
}

double beta_k(int j) {
  require_j("beta_k", j);
  const double a = kPi / (4.0 * j);
  return std::sin(a) / (std::cos(a) - 1.0);
}

double beta_max_b(int j) {
  require_j("beta_max_b", j);
  return std::tan(kPi / (8.0 * j));
}

double beta_h(int j, double b) {
  const double hi = beta_max_b(j);
  if (!(b >= -1e-12 && b <= hi + 1e-12)) {
    std::ostringstream os;
    os.precision(17);
    os << "beta_h: b = " << b << " outside [0, " << hi << "]";
    throw DomainError(os.str());
  }
  const double k = beta_k(j);
  return kSqrt2 * (k - b) / (k * (b * b + 1.0));
}

double beta_h_derivative(int j, double b) {
  const double k = beta_k(j);
  const double q = b * b + 1.0;
  return kSqrt2 / k * (b * b - 2.0 * b * k - 1.0) / (q * q);
}

double beta_critical(int j) {
  const double k = beta_k(j);
  return k + std::sqrt(k * k + 1.0);
}

Parallelogram beta_square(int j, double b) {
  const double k = beta_k(j);
  const double s = k - b;
  const Vec2 p{k / s, k * b / s};
  return {p, perp(p)};
}

double dist_pn_phn(int n, int h) {
  if (n < 4 || n % 2 != 0) throw DomainError("dist_pn_phn: n must be even and >= 4, got " + std::to_string(n));
  if (h < 3 || h % 2 == 0) throw DomainError("dist_pn_phn: h must be odd and >= 3, got " + std::to_string(h));
  return std::cos(kPi / (static_cast<double>(h) * n)) / std::cos(kPi / n);
}

}  // namespace bmdist::evengon
