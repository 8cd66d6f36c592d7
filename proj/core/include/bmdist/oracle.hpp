#pragma once

#include <string>
#include <vector>

#include "bmdist/parallelogram.hpp"
#include "bmdist/polygon.hpp"
#include "bmdist/vec2.hpp"

namespace bmdist {

//------------------------------------------------------------------------------
// Brute-force Banach-Mazur distance from the parallelogram to a centrally
// symmetric polygon C.
//
// Every parallelogram realizing the distance can be taken inscribed in C, so
// the search runs over generator pairs (boundary_point(t1), boundary_point(t2))
// with t2 - t1 in (0, m), minimizing circum_ratio. The objective is
// piecewise smooth, with kinks wherever the vertex of C attaining the maximal
// gauge changes; refinement is derivative-free.
//------------------------------------------------------------------------------

struct OracleOptions {
  int grid = 360;                // cells per axis; must be >= 8
  bool refine = true;
  int starts = 5;                // refinement start points (best grid-local minima)
  double step_tol = 1e-9;        // stop when the bracket half-width falls below this
  double objective_tol = 1e-12;  // ... or when a sweep improves by less than this twice in a row
  double shrink = 0.5;           // bracket shrink factor per sweep
  int max_sweeps = 200;
};

struct BMResult {
  double lambda;                // best circumscribed homothety ratio found
  Parallelogram parallelogram;  // inscribed in C; lambda * parallelogram contains C
  double t_u;                   // boundary parameter of parallelogram.u()
  double t_v;                   // boundary parameter of parallelogram.v()
  std::vector<Vec2> contacts;   // vertices of C with gauge within 1e-9 of lambda
  int grid_resolution;
  bool refined;
  double grid_lambda;           // best value on the grid alone
  long evaluations;             // objective evaluations, grid and refinement
};

// Objective at (t1, t2): circum_ratio of the inscribed parallelogram with
// generators boundary_point(t1), boundary_point(t2). +infinity when the
// generators are (nearly) collinear.
double inscribed_objective(const CentralPolygon& c, double t1, double t2);

BMResult bm_distance(const CentralPolygon& c, const OracleOptions& options);
BMResult bm_distance(const CentralPolygon& c, int grid = 360, bool refine = true);

// Representatives of all (near-)optimal inscribed parallelograms, i.e. local
// minima with value <= result.lambda + tol, one per orbit of the symmetry
// group of C. Sorted by objective value.
std::vector<Parallelogram> argmin_orbit(const CentralPolygon& c, const BMResult& result, double tol,
                                        const OracleOptions& options = {});

enum class ClaimMode { exact, upper_bound };

struct ClaimReport {
  double claimed;
  double computed;
  ClaimMode mode;
  double tolerance;
  bool pass;
  double gap;        // claimed - computed
  std::string note;  // "conjecture support" for upper-bound claims
  BMResult result;
};

// exact: pass iff |lambda - claimed| <= tol.
// upper_bound: pass iff lambda <= claimed + tol.
ClaimReport verify_claim(const CentralPolygon& c, double claimed, ClaimMode mode, double tol,
                         const OracleOptions& options = {});

std::string to_string(ClaimMode mode);

}  // namespace bmdist
