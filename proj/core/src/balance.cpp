#include "bmdist/balance.hpp"

#include <cmath>
#include <sstream>

#include "bmdist/errors.hpp"

namespace bmdist {

StripRatios strip_ratios(const CentralPolygon& c, double fixed_t, double arc_t) {
  const Parallelogram p(boundary_point(c, fixed_t), boundary_point(c, arc_t));
  const Strip k1 = p.second_strip();
  const Strip k2 = p.first_strip();
  return {support(c, k1.normal()) / k1.half_width(), support(c, k2.normal()) / k2.half_width()};
}

BalanceReport balance_inscribed(const CentralPolygon& c, double arc_lo, double arc_hi, double fixed_t,
                                double tol) {
  const double m = static_cast<double>(c.half());
  if (!(arc_lo < arc_hi) || !(arc_lo > fixed_t) || !(arc_hi < fixed_t + m)) {
    std::ostringstream os;
    os << "balance_inscribed: arc [" << arc_lo << ", " << arc_hi << "] must lie inside (" << fixed_t << ", "
       << fixed_t + m << ")";
    throw DomainError(os.str());
  }

  auto report = [&](double t, const StripRatios& r, int iterations) {
    const Parallelogram p(boundary_point(c, fixed_t), boundary_point(c, t));
    return BalanceReport{p, circum_ratio(p, c), t, std::abs(r.difference()), iterations};
  };

  double lo = arc_lo;
  double hi = arc_hi;
  StripRatios r_lo = strip_ratios(c, fixed_t, lo);
  const StripRatios r_hi = strip_ratios(c, fixed_t, hi);
  if (std::abs(r_lo.difference()) <= tol) return report(lo, r_lo, 0);
  if (std::abs(r_hi.difference()) <= tol) return report(hi, r_hi, 0);
  if ((r_lo.difference() > 0.0) == (r_hi.difference() > 0.0)) {
    throw ConvergenceError("family not balanceable on this arc: strip-ratio difference has the same sign at both ends");
  }

  for (int it = 1; it <= kBisectionCap; ++it) {
    const double mid = 0.5 * (lo + hi);
    const StripRatios r_mid = strip_ratios(c, fixed_t, mid);
    if (std::abs(r_mid.difference()) <= tol) return report(mid, r_mid, it);
    if (mid <= lo || mid >= hi) break;
    if ((r_mid.difference() > 0.0) == (r_lo.difference() > 0.0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("balance_inscribed: bisection did not reach the residual tolerance");
}

BalanceReport balance_inscribed(const CentralPolygon& c, double fixed_t, double margin) {
  const double m = static_cast<double>(c.half());
  return balance_inscribed(c, fixed_t + margin, fixed_t + m - margin, fixed_t);
}

}  // namespace bmdist
