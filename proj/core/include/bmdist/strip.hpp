#pragma once

#include "bmdist/polygon.hpp"
#include "bmdist/vec2.hpp"

namespace bmdist {

// Region between the two lines <normal, x> = +half_width and
// <normal, x> = -half_width. The normal is stored with unit length.
class Strip {
 public:
  // Normalizes `normal`; throws DomainError on a zero normal or a
  // non-positive half width.
  Strip(const Vec2& normal, double half_width);

  const Vec2& normal() const { return normal_; }
  double half_width() const { return half_width_; }
  double width() const { return 2.0 * half_width_; }

  bool contains(const Vec2& x, double tol = 0.0) const;
  bool parallel_to(const Strip& other, double tol = 1e-12) const;

 private:
  Vec2 normal_;
  double half_width_;
};

// Narrowest strip with the given normal direction containing the polygon.
Strip strip_of(const CentralPolygon& c, const Vec2& normal);

// Origin-symmetric strip whose boundary lines have direction `line_dir` and
// pass through `point` and -point.
Strip strip_through(const Vec2& line_dir, const Vec2& point);

struct TransversalRatio {
  double width_ratio;       // width(outer) / width(inner)
  double coordinate_ratio;  // a^outer / a^inner along the transversal
};

// For two parallel origin-symmetric strips and a line L through the origin
// with direction l_dir, compares the width ratio with the ratio of the
// coordinates of the points where L meets the "+" boundary line of each
// strip. The "+" side is taken consistently for both strips. The two
// components agree for every valid input.
//
// Throws DomainError when the strips are not parallel or L is parallel to them.
TransversalRatio transversal_ratio(const Strip& inner, const Strip& outer, const Vec2& l_dir);

}  // namespace bmdist
