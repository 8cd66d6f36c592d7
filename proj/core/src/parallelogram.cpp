#include "bmdist/parallelogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bmdist/errors.hpp"

namespace bmdist {

namespace {

double segment_distance(const Vec2& x, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  const double s = len2 > 0.0 ? std::clamp(dot(x - a, ab) / len2, 0.0, 1.0) : 0.0;
  return distance(x, a + s * ab);
}

// Distance from x to the filled parallelogram (0 inside).
double point_distance(const Parallelogram& p, const Vec2& x) {
  if (gauge(p, x) <= 1.0) return 0.0;
  const auto vs = p.vertices();
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vs.size(); ++i) d = std::min(d, segment_distance(x, vs[i], vs[(i + 1) % vs.size()]));
  return d;
}

}  // namespace

Parallelogram::Parallelogram(const Vec2& u, const Vec2& v) : u_(u), v_(v) {
  if (!is_finite(u) || !is_finite(v)) throw DomainError("Parallelogram: non-finite generator");
  if (!(cross(u, v) > 1e-12)) throw DomainError("Parallelogram: degenerate or clockwise generators");
}

Parallelogram Parallelogram::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("Parallelogram::scaled: factor must be positive");
  return {factor * u_, factor * v_};
}

Parallelogram Parallelogram::mapped(const Mat2& map) const {
  const Vec2 a = map(u_);
  const Vec2 b = map(v_);
  if (map.det() < 0.0) return {b, a};
  return {a, b};
}

Strip Parallelogram::first_strip() const { return strip_through(v_ - u_, u_); }

Strip Parallelogram::second_strip() const { return strip_through(u_ + v_, u_); }

double gauge(const Parallelogram& p, const Vec2& w) {
  const double det = cross(p.u(), p.v());
  const double alpha = cross(w, p.v()) / det;
  const double beta = cross(p.u(), w) / det;
  return std::abs(alpha) + std::abs(beta);
}

double circum_ratio(const Parallelogram& p, const CentralPolygon& c) {
  // gauge(-x) = gauge(x), so the first half of the vertex list suffices.
  double lambda = 0.0;
  const auto vs = c.vertices();
  for (std::size_t i = 0; i < c.half(); ++i) lambda = std::max(lambda, gauge(p, vs[i]));
  return lambda;
}

bool is_inscribed(const Parallelogram& p, const CentralPolygon& c, double tol) {
  return std::abs(boundary_offset(c, p.u())) <= tol && std::abs(boundary_offset(c, p.v())) <= tol;
}

bool is_circumscribed(const Parallelogram& p, const CentralPolygon& c, double tol) {
  for (const auto& x : c.vertices()) {
    if (gauge(p, x) > 1.0 + tol) return false;
  }
  for (const Strip& s : {p.first_strip(), p.second_strip()}) {
    if (std::abs(s.half_width() - support(c, s.normal())) > tol) return false;
  }
  return true;
}

bool same_parallelogram(const Parallelogram& a, const Parallelogram& b, double tol) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  return std::all_of(va.begin(), va.end(), [&](const Vec2& x) {
    return std::any_of(vb.begin(), vb.end(), [&](const Vec2& y) { return distance(x, y) <= tol; });
  });
}

double hausdorff_distance(const Parallelogram& a, const Parallelogram& b) {
  // The distance to a convex set is convex, so both one-sided maxima are
  // attained at vertices.
  double h = 0.0;
  for (const auto& x : a.vertices()) h = std::max(h, point_distance(b, x));
  for (const auto& x : b.vertices()) h = std::max(h, point_distance(a, x));
  return h;
}

}  // namespace bmdist
