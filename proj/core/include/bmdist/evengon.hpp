#pragma once

#include <string_view>

#include "bmdist/parallelogram.hpp"
#include "bmdist/polygon.hpp"

namespace bmdist::evengon {

// Residue class of n modulo 8.
enum class Family { k8j, k8j2, k8j4, k8j6 };

// Whether the closed form is the distance itself or only a proven upper bound
// (conjectured to be attained).
enum class Kind { exact, upper_bound };

std::string_view to_string(Family f);
std::string_view to_string(Kind k);

struct EvenGonValue {
  int n;
  int j;  // n = 8j + r
  Family family;
  Kind kind;
  double value;
};

// Distance from the parallelogram to P_n for even n >= 6:
//   n = 8j     exact        sqrt(2)
//   n = 8j+2   upper bound  sec(2j pi/n)/2 + cos(2j pi/n)
//   n = 8j+4   exact        sqrt(2) cos(pi/n)
//   n = 8j+6   upper bound  sin((2j+2) pi/n) csc((4j+2) pi/n) + cos((2j+2) pi/n)
EvenGonValue theorem2_value(int n);

// Parallelogram whose generators are where the positive coordinate axes
// leave C.
Parallelogram axis_parallelogram(const CentralPolygon& c);

// Slope of side v_0 v_1 of P_{8j}: sin(pi/4j) / (cos(pi/4j) - 1) < 0.
double beta_k(int j);

// Width ratio of the circumscribed copy of the inscribed square of P_{8j}
// whose vertex p lies on the ray y = b x:  sqrt(2) (k - b) / (k (b^2 + 1)).
// Domain b in [0, tan(pi/8j)].
double beta_h(int j, double b);

// Derivative of beta_h in b: sqrt(2)/k * (b^2 - 2bk - 1) / (b^2 + 1)^2.
double beta_h_derivative(int j, double b);

// Unique interior critical point k + sqrt(k^2 + 1) of beta_h (a maximum).
double beta_critical(int j);

// tan(pi/8j): slope of the ray through the midpoint of v_0 v_1.
double beta_max_b(int j);

// The inscribed square of P_{8j} with vertex p = (k/(k-b), kb/(k-b)) and
// next vertex q = p rotated by 90 degrees.
Parallelogram beta_square(int j, double b);

// cos(pi/(h n)) sec(pi/n) for even n >= 4 and odd h >= 3.
double dist_pn_phn(int n, int h);

}  // namespace bmdist::evengon
