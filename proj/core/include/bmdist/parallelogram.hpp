#pragma once

#include <array>

#include "bmdist/polygon.hpp"
#include "bmdist/strip.hpp"
#include "bmdist/vec2.hpp"

namespace bmdist {

// Default tolerance for inscribed / circumscribed contact tests.
inline constexpr double kContactTolerance = 1e-9;

//------------------------------------------------------------------------------
// Origin-symmetric parallelogram with vertices u, v, -u, -v (counterclockwise).
// Its two pairs of opposite sides lie on the boundary lines of
//   first_strip():  sides uv and (-u)(-v), direction v - u
//   second_strip(): sides v(-u) and (-v)u, direction u + v
//------------------------------------------------------------------------------
class Parallelogram {
 public:
  // Throws DomainError unless cross(u, v) > 1e-12.
  Parallelogram(const Vec2& u, const Vec2& v);

  const Vec2& u() const { return u_; }
  const Vec2& v() const { return v_; }
  std::array<Vec2, 4> vertices() const { return {u_, v_, -u_, -v_}; }

  Parallelogram scaled(double factor) const;
  Parallelogram mapped(const Mat2& map) const;

  Strip first_strip() const;
  Strip second_strip() const;

 private:
  Vec2 u_;
  Vec2 v_;
};

// |alpha| + |beta| where w = alpha u + beta v (Cramer's rule).
double gauge(const Parallelogram& p, const Vec2& w);

// Smallest lambda with C inside lambda P: max over vertices of C of gauge.
double circum_ratio(const Parallelogram& p, const CentralPolygon& c);

// All four vertices on bd(C) within tol.
bool is_inscribed(const Parallelogram& p, const CentralPolygon& c, double tol = kContactTolerance);

// C inside P (gauges <= 1 + tol) and both side strips touch C within tol.
bool is_circumscribed(const Parallelogram& p, const CentralPolygon& c, double tol = kContactTolerance);

// Same parallelogram as a point set: vertex sets agree within tol.
bool same_parallelogram(const Parallelogram& a, const Parallelogram& b, double tol);

// Hausdorff distance between the two (filled) parallelograms.
double hausdorff_distance(const Parallelogram& a, const Parallelogram& b);

}  // namespace bmdist
