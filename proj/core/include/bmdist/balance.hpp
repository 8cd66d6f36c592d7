#pragma once

#include "bmdist/parallelogram.hpp"
#include "bmdist/polygon.hpp"

namespace bmdist {

struct BalanceReport {
  Parallelogram parallelogram;  // inscribed, generators at fixed_t and arc_parameter
  double ratio;                 // common strip ratio; ratio * parallelogram is circumscribed
  double arc_parameter;         // boundary parameter of the second generator
  double residual;              // |ratio_1 - ratio_2| at arc_parameter
  int iterations;
};

// Width ratios of the two side strips of the inscribed parallelogram with
// generators boundary_point(fixed_t) and boundary_point(c), each measured
// against the narrowest parallel strip containing C.
//   through_antipode: strip whose lines pass through c and -fixed (direction u + v)
//   through_fixed:    strip whose lines pass through c and  fixed (direction v - u)
struct StripRatios {
  double through_antipode;
  double through_fixed;
  double difference() const { return through_antipode - through_fixed; }
};

StripRatios strip_ratios(const CentralPolygon& c, double fixed_t, double arc_t);

// Finds by bisection an arc parameter c0 in [arc_lo, arc_hi] where the two
// strip ratios agree within tol. The arc must lie strictly inside
// (fixed_t, fixed_t + m), and the ratio difference must change sign over it.
//
// Throws ConvergenceError when there is no sign change on the arc ("family not
// balanceable on this arc") or the iteration cap is reached; DomainError for a
// malformed arc.
BalanceReport balance_inscribed(const CentralPolygon& c, double arc_lo, double arc_hi, double fixed_t,
                                double tol = kContactTolerance);

// Convenience overload spanning the whole admissible arc, shortened by
// `margin` parameter units at each end.
BalanceReport balance_inscribed(const CentralPolygon& c, double fixed_t, double margin = 1e-3);

inline constexpr int kBisectionCap = 200;

}  // namespace bmdist
