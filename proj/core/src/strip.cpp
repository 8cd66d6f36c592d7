#include "bmdist/strip.hpp"

#include <cmath>

#include "bmdist/errors.hpp"

namespace bmdist {

Strip::Strip(const Vec2& normal, double half_width) {
  const double len = norm(normal);
  if (!(len > 0.0) || !std::isfinite(len)) throw DomainError("Strip: zero or non-finite normal");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("Strip: half width must be positive and finite");
  }
  normal_ = normal / len;
  half_width_ = half_width;
}

bool Strip::contains(const Vec2& x, double tol) const {
  return std::abs(dot(normal_, x)) <= half_width_ + tol;
}

bool Strip::parallel_to(const Strip& other, double tol) const {
  return std::abs(cross(normal_, other.normal_)) <= tol;
}

Strip strip_of(const CentralPolygon& c, const Vec2& normal) {
  const double len = norm(normal);
  if (!(len > 0.0)) throw DomainError("strip_of: zero normal");
  const Vec2 unit = normal / len;
  return Strip(unit, support(c, unit));
}

Strip strip_through(const Vec2& line_dir, const Vec2& point) {
  const double len = norm(line_dir);
  if (!(len > 0.0)) throw DomainError("strip_through: zero line direction");
  const Vec2 unit = perp(line_dir) / len;
  return Strip(unit, std::abs(dot(unit, point)));
}

TransversalRatio transversal_ratio(const Strip& inner, const Strip& outer, const Vec2& l_dir) {
  if (!inner.parallel_to(outer)) throw DomainError("transversal_ratio: strips are not parallel");
  const double len = norm(l_dir);
  if (!(len > 0.0)) throw DomainError("transversal_ratio: zero transversal direction");

  const Vec2& n1 = inner.normal();
  // Orient the outer normal like the inner one so both "+" lines lie on the same side.
  const Vec2 n2 = dot(n1, outer.normal()) < 0.0 ? -outer.normal() : outer.normal();

  const double along1 = dot(n1, l_dir);
  const double along2 = dot(n2, l_dir);
  if (std::abs(along1) <= 1e-12 * len || std::abs(along2) <= 1e-12 * len) {
    throw DomainError("transversal_ratio: transversal is parallel to the strips");
  }
  const Vec2 a1 = (inner.half_width() / along1) * l_dir;
  const Vec2 a2 = (outer.half_width() / along2) * l_dir;

  // Use the coordinate along which L has the larger component; the other may vanish.
  const bool use_x = std::abs(l_dir.x) >= std::abs(l_dir.y);
  const double coordinate_ratio = use_x ? a2.x / a1.x : a2.y / a1.y;
  return {outer.width() / inner.width(), coordinate_ratio};
}

}  // namespace bmdist
