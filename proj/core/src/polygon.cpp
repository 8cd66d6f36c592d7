#include "bmdist/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "bmdist/errors.hpp"

namespace bmdist {

namespace {

std::string describe(std::size_t i, const Vec2& v) {
  std::ostringstream os;
  os.precision(17);
  os << "vertex " << i << " " << v;
  return os.str();
}

// cos/sin of 2*pi*j/n, reduced to the first quadrant so that quarter turns
// come out as exact 0/1 and the four quadrants are exact sign flips.
Vec2 unit_circle_point(long j, long n) {
  const long quarter_steps = (4 * j) / n;
  const long rem = 4 * j - quarter_steps * n;
  const double phi = 0.5 * std::numbers::pi * static_cast<double>(rem) / static_cast<double>(n);
  Vec2 p = rem == 0 ? Vec2{1.0, 0.0} : Vec2{std::cos(phi), std::sin(phi)};
  switch (quarter_steps % 4) {
    case 1: p = perp(p); break;
    case 2: p = -p; break;
    case 3: p = -perp(p); break;
    default: break;
  }
  return p;
}

}  // namespace

CentralPolygon::CentralPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  normals_.reserve(n);
  offsets_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 edge = vertices_[(i + 1) % n] - vertices_[i];
    const Vec2 outward = normalized(Vec2{edge.y, -edge.x});
    normals_.push_back(outward);
    offsets_.push_back(dot(outward, vertices_[i]));
  }
}

CentralPolygon CentralPolygon::from_vertices(std::vector<Vec2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 4 || n % 2 != 0) {
    throw InvalidPolygon("even vertex count >= 4",
                         "got " + std::to_string(n) + " vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(vertices[i])) throw InvalidPolygon("finite coordinates", describe(i, vertices[i]));
  }

  double scale = 0.0;
  for (const auto& v : vertices) scale = std::max(scale, norm(v));

  const std::size_t m = n / 2;
  for (std::size_t i = 0; i < m; ++i) {
    const double residue = norm(vertices[i] + vertices[i + m]);
    if (residue > kSymmetryTolerance * std::max(1.0, scale)) {
      std::ostringstream os;
      os << describe(i + m, vertices[i + m]) << " is not the negation of " << describe(i, vertices[i])
         << " (residue " << residue << ")";
      throw InvalidPolygon("central symmetry", os.str());
    }
  }
  // Antipodes are re-derived as exact negations.
  for (std::size_t i = 0; i < m; ++i) vertices[i + m] = -vertices[i];

  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = vertices[(i + n - 1) % n];
    const Vec2& cur = vertices[i];
    const Vec2& next = vertices[(i + 1) % n];
    const Vec2 e1 = cur - prev;
    const Vec2 e2 = next - cur;
    const double turn = cross(e1, e2);
    if (!(turn > 1e-12 * norm(e1) * norm(e2)) || norm(e1) == 0.0) {
      throw InvalidPolygon("strict convexity (counterclockwise, no three collinear)",
                           "turn at " + describe(i, cur) + " is " + std::to_string(turn));
    }
  }
  // Total turning of a locally convex closed polyline must be one full turn,
  // otherwise the vertex list winds around more than once.
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = vertices[i] - vertices[(i + n - 1) % n];
    const Vec2 e2 = vertices[(i + 1) % n] - vertices[i];
    winding += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  if (std::abs(winding - 2.0 * std::numbers::pi) > 1e-6) {
    throw InvalidPolygon("strict convexity (counterclockwise, no three collinear)",
                         "vertex list winds " + std::to_string(winding / (2.0 * std::numbers::pi)) +
                             " times");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[(i + 1) % n];
    if (!(cross(b - a, -a) > 0.0)) {
      throw InvalidPolygon("origin strictly interior", "origin not left of edge starting at " + describe(i, a));
    }
  }
  return CentralPolygon(std::move(vertices));
}

CentralPolygon regular_polygon(int n) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("regular_polygon: n must be even and >= 4, got " + std::to_string(n));
  }
  std::vector<Vec2> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) vertices.push_back(unit_circle_point(j, n));
  return CentralPolygon::from_vertices(std::move(vertices));
}

double support(const CentralPolygon& c, const Vec2& dir) {
  if (!(dir.x != 0.0 || dir.y != 0.0)) throw DomainError("support: zero direction");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : c.vertices()) best = std::max(best, dot(v, dir));
  return best;
}

Vec2 boundary_point(const CentralPolygon& c, double t) {
  const double n = static_cast<double>(c.size());
  double r = std::fmod(t, n);
  if (r < 0.0) r += n;
  double whole = std::floor(r);
  double f = r - whole;
  auto i = static_cast<std::size_t>(whole);
  if (i >= c.size()) {
    i = 0;
    f = 0.0;
  }
  if (f == 0.0) return c.vertex(i);
  return (1.0 - f) * c.vertex(i) + f * c.vertex(i + 1);
}

Vec2 ray_boundary_point(const CentralPolygon& c, const Vec2& dir) {
  if (!(dir.x != 0.0 || dir.y != 0.0)) throw DomainError("ray_boundary_point: zero direction");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vec2& a = c.vertex(i);
    const Vec2& b = c.vertex(i + 1);
    const double sa = cross(dir, a);
    const double sb = cross(dir, b);
    if (sa == 0.0 && dot(dir, a) > 0.0) return a;
    // The ray crosses edge ab from its right side to its left side.
    if (sa < 0.0 && sb > 0.0) {
      const double f = sa / (sa - sb);
      return (1.0 - f) * a + f * b;
    }
  }
  // Unreachable for a polygon containing the origin in its interior.
  return dir / polygon_gauge(c, dir);
}

double polygon_gauge(const CentralPolygon& c, const Vec2& x) {
  double g = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) g = std::max(g, dot(c.edge_normal(i), x) / c.edge_offset(i));
  return g;
}

double boundary_offset(const CentralPolygon& c, const Vec2& x) {
  double d = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) d = std::max(d, dot(c.edge_normal(i), x) - c.edge_offset(i));
  return d;
}

CentralPolygon transformed(const CentralPolygon& c, const Mat2& map) {
  const double det = map.det();
  if (!(std::abs(det) > 0.0) || !std::isfinite(det)) throw DomainError("transformed: singular linear map");
  std::vector<Vec2> out;
  out.reserve(c.size());
  for (const auto& v : c.vertices()) out.push_back(map(v));
  if (det < 0.0) std::reverse(out.begin() + 1, out.end());
  return CentralPolygon::from_vertices(std::move(out));
}

std::vector<Mat2> symmetry_group(const CentralPolygon& c, double tol) {
  const std::size_t n = c.size();
  const Vec2 v0 = c.vertex(0);
  const double r0 = norm(v0);
  const double a0 = std::atan2(v0.y, v0.x);

  auto maps_onto = [&](const Mat2& g, auto index_of) {
    for (std::size_t i = 0; i < n; ++i) {
      if (distance(g(c.vertex(i)), c.vertex(index_of(i))) > tol) return false;
    }
    return true;
  };

  std::vector<Mat2> rotations{Mat2{}};
  std::vector<Mat2> reflections;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 vk = c.vertex(k);
    if (std::abs(norm(vk) - r0) > tol) continue;
    const double ak = std::atan2(vk.y, vk.x);
    if (k != 0) {
      const Mat2 rot = Mat2::rotation(ak - a0);
      if (maps_onto(rot, [&](std::size_t i) { return i + k; })) rotations.push_back(rot);
    }
    const Mat2 refl = Mat2::reflection(0.5 * (a0 + ak));
    if (maps_onto(refl, [&](std::size_t i) { return (k + n - i) % n; })) reflections.push_back(refl);
  }
  rotations.insert(rotations.end(), reflections.begin(), reflections.end());
  return rotations;
}

}  // namespace bmdist
