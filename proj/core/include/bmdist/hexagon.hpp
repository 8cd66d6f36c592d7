#pragma once

#include <vector>

#include "bmdist/parallelogram.hpp"
#include "bmdist/polygon.hpp"
#include "bmdist/vec2.hpp"

namespace bmdist::hexagon {

//------------------------------------------------------------------------------
// Closed forms for parallelograms inscribed in the regular hexagon P6
// (v_0 = (1,0), counterclockwise). A family member is indexed by the slope b
// of the ray from the origin through its first vertex p, which lies on side
// v_0 v_1; the second vertex q lies on side v_1 v_2 on the line x = c y, with
// c = c(b) chosen so that both side strips of the parallelogram have the same
// width ratio to the parallel supporting strips of P6. That common ratio is
// h(b).
//
// b ranges over [0, sqrt(3)/3] for the geometry (b = sqrt(3)/3 puts p at the
// midpoint of v_0 v_1); h(b) is analysed on [0, sqrt(3)/5], the range in which
// the side of h(b) P(b) through p supports P6 at v_5.
//------------------------------------------------------------------------------

// sqrt(3)/3
double max_slope();

struct FamilyPoint {
  double b;
  double c;
  Vec2 p;
  Vec2 q;
  Parallelogram parallelogram;  // generators (p, q)
  double h;
};

// c(b) = -2b / (sqrt(3) b + 3). Domain [0, sqrt(3)/3].
double hex_c(double b);

// h(b) = (b^2 + 4 sqrt(3) b + 9) / (4 b^2 + 2 sqrt(3) b + 6). Domain [0, sqrt(3)/5].
double hex_h(double b);

// h'(b) = (-7 sqrt(3) b^2 - 30 b + 3 sqrt(3)) / (2 (2 b^2 + sqrt(3) b + 3)^2).
double hex_h_derivative(double b);

// Numerator of h'(b); carries its sign.
double hex_h_derivative_numerator(double b);

// (-10 sqrt(3) + sqrt(384)) / 14, the unique critical point of h in the regime.
double hex_critical_b();

// sqrt(3)/5: end of the regime in which h(b) describes the circumscribed copy.
double hex_regime_boundary();

// Slope of the line through p and q for arbitrary (b, c).
double hex_sigma(double b, double c);

// Slope of the line through s = -q and p for arbitrary (b, c).
double hex_varsigma(double b, double c);

// hex_varsigma(b, hex_c(b)) in reduced form: (3 sqrt(3) b + 3) / (2 (sqrt(3) - b)).
double hex_supporting_slope(double b);

// p(b): intersection of y = b x with side v_0 v_1. Domain [0, sqrt(3)/3].
Vec2 hex_p(double b);

// q(c): intersection of x = c y with side v_1 v_2. Domain [-sqrt(3)/3, sqrt(3)/3].
Vec2 hex_q(double c);

// Family member at b in [0, sqrt(3)/5].
FamilyPoint hex_build(double b);

// The two parallelograms P in P6 with P6 inside (3/2) P, up to the
// symmetries of P6: generators ((1,0), (0, sqrt(3)/2)) and
// ((5/6, sqrt(3)/6), (-1/6, sqrt(3)/2)).
std::vector<Parallelogram> hex_optimal_positions();

// Orbit of P under the 12 symmetries of P6, duplicates (as point sets, tol
// 1e-9) removed. The first element is P itself.
std::vector<Parallelogram> hex_symmetry_orbit(const Parallelogram& p);

// The 12 symmetries of P6 (identity first).
std::vector<Mat2> hex_symmetries();

}  // namespace bmdist::hexagon
