#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bmdist/vec2.hpp"

namespace bmdist {

// Tolerance used when validating central symmetry of an input vertex list.
inline constexpr double kSymmetryTolerance = 1e-9;

//------------------------------------------------------------------------------
// Convex polygon centred at the origin with vertices v_0..v_{2m-1} in
// counterclockwise order and v_{i+m} = -v_i. Instances are immutable; the
// second half of the vertex list is always the exact negation of the first.
//------------------------------------------------------------------------------
class CentralPolygon {
 public:
  // Validates strict convexity, counterclockwise order, central symmetry
  // (within kSymmetryTolerance) and origin interiority. Throws InvalidPolygon.
  static CentralPolygon from_vertices(std::vector<Vec2> vertices);

  std::span<const Vec2> vertices() const { return vertices_; }
  const Vec2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::size_t size() const { return vertices_.size(); }
  // Half the vertex count; boundary parameters t and t + m are antipodal.
  std::size_t half() const { return vertices_.size() / 2; }

  // Unit outward normal of edge v_i v_{i+1}.
  Vec2 edge_normal(std::size_t i) const { return normals_[i % normals_.size()]; }
  // Distance from the origin to the line through edge i.
  double edge_offset(std::size_t i) const { return offsets_[i % offsets_.size()]; }

 private:
  explicit CentralPolygon(std::vector<Vec2> vertices);

  std::vector<Vec2> vertices_;
  std::vector<Vec2> normals_;
  std::vector<double> offsets_;
};

// The regular n-gon with vertex j at angle 2*pi*j/n on the unit circle.
// n must be even and at least 4.
CentralPolygon regular_polygon(int n);

// max over vertices of <vertex, dir>. dir must be nonzero.
double support(const CentralPolygon& c, const Vec2& dir);

// Point of the boundary at parameter t: t = i + f, f in [0,1), maps to
// (1-f) v_i + f v_{i+1}. t is taken modulo the vertex count.
Vec2 boundary_point(const CentralPolygon& c, double t);

// Point where the ray from the origin in direction dir leaves the polygon.
// Vertices hit exactly are returned unchanged.
Vec2 ray_boundary_point(const CentralPolygon& c, const Vec2& dir);

// Minkowski functional of the polygon itself: max over edges of
// <normal, x> / offset. Equals 1 exactly on the boundary.
double polygon_gauge(const CentralPolygon& c, const Vec2& x);

// Signed distance to the boundary: negative inside, zero on it, positive outside
// (exact inside, a lower bound on the true distance outside).
double boundary_offset(const CentralPolygon& c, const Vec2& x);

// Image under a nonsingular linear map. Orientation-reversing maps get their
// vertex list reversed (keeping v_0 first) so the result stays counterclockwise.
CentralPolygon transformed(const CentralPolygon& c, const Mat2& map);

// Orthogonal maps (rotations and reflections about the origin) that carry the
// vertex set onto itself within tol. Always contains the identity first.
std::vector<Mat2> symmetry_group(const CentralPolygon& c, double tol = 1e-9);

}  // namespace bmdist
