#include "bmdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bmdist/errors.hpp"

namespace bmdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Keeps t2 - t1 away from 0 and m, where the generators become collinear.
constexpr double kEdgeGap = 1e-6;
constexpr double kContactWindow = 1e-9;
constexpr int kGoldenCap = 300;

struct Sample {
  double x;
  double f;
};

// Golden-section search on [a, b]; returns the best point evaluated.
template <class F>
Sample golden_min(F&& f, double a, double b, double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  Sample best = f1 <= f2 ? Sample{x1, f1} : Sample{x2, f2};
  for (int it = 0; it < kGoldenCap && b - a > tol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
      if (f1 < best.f) best = {x1, f1};
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
      if (f2 < best.f) best = {x2, f2};
    }
  }
  return best;
}

struct Cell {
  int i;
  int j;
  double f;
};

// Objective over (t1, s) with t2 = t1 + s, on a grid x (grid - 1) mesh
// t1 = i 2m/grid, s = j m/grid.
class Search {
 public:
  Search(const CentralPolygon& c, const OracleOptions& opt)
      : c_(c), opt_(opt), m_(static_cast<double>(c.half())), grid_(opt.grid) {}

  double m() const { return m_; }
  double t1_step() const { return 2.0 * m_ / grid_; }
  double s_step() const { return m_ / grid_; }
  double t1_at(int i) const { return i * t1_step(); }
  double s_at(int j) const { return clamp_s(j * s_step()); }
  double clamp_s(double s) const { return std::clamp(s, kEdgeGap, m_ - kEdgeGap); }
  long evaluations() const { return evaluations_; }

  double eval(double t1, double s) {
    ++evaluations_;
    return inscribed_objective(c_, t1, t1 + s);
  }

  // Row-major values, index i * (grid - 1) + (j - 1), j in [1, grid).
  std::vector<double> scan() {
    std::vector<double> values(static_cast<std::size_t>(grid_) * (grid_ - 1));
    for (int i = 0; i < grid_; ++i) {
      const double t1 = t1_at(i);
      for (int j = 1; j < grid_; ++j) values[index(i, j)] = eval(t1, s_at(j));
    }
    return values;
  }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * (grid_ - 1) + static_cast<std::size_t>(j - 1);
  }

  // Cells no larger than any of their 8 neighbours (periodic in t1), each
  // with the largest absolute difference to a neighbour.
  std::vector<std::pair<Cell, double>> local_minima(const std::vector<double>& values) const {
    std::vector<std::pair<Cell, double>> out;
    for (int i = 0; i < grid_; ++i) {
      for (int j = 1; j < grid_; ++j) {
        const double f = values[index(i, j)];
        if (!std::isfinite(f)) continue;
        bool is_min = true;
        double spread = 0.0;
        for (int di = -1; di <= 1 && is_min; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            if (di == 0 && dj == 0) continue;
            const int jj = j + dj;
            if (jj < 1 || jj >= grid_) continue;
            const int ii = (i + di + grid_) % grid_;
            const double g = values[index(ii, jj)];
            if (g < f) {
              is_min = false;
              break;
            }
            if (std::isfinite(g)) spread = std::max(spread, g - f);
          }
        }
        if (is_min) out.push_back({{i, j, f}, spread});
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.f < b.first.f; });
    return out;
  }

  struct Refined {
    double t1;
    double s;
    double f;
  };

  // Alternating golden-section sweeps on a bracket recentred at the current
  // point and shrunk after each sweep. The s step is a plain line search; the
  // t1 step minimizes the s-profile so that ridges where two side strips are
  // balanced are followed instead of blocking the descent.
  Refined refine(double t1, double s, double f) {
    double r1 = t1_step();
    double r2 = s_step();
    int quiet = 0;
    for (int sweep = 0; sweep < opt_.max_sweeps && std::max(r1, r2) >= opt_.step_tol; ++sweep) {
      const double before = f;
      const double inner_tol = std::max(1e-13, 1e-3 * std::min(r1, r2));

      const Sample ps = golden_min([&](double x) { return eval(t1, x); }, clamp_s(s - r2), clamp_s(s + r2), inner_tol);
      if (ps.f < f) {
        s = ps.x;
        f = ps.f;
      }

      const double s_lo = clamp_s(s - r2);
      const double s_hi = clamp_s(s + r2);
      Sample best_profile{t1, f};
      double best_profile_s = s;
      auto profile = [&](double t) {
        const Sample q = golden_min([&](double x) { return eval(t, x); }, s_lo, s_hi, inner_tol);
        if (q.f < best_profile.f) {
          best_profile = {t, q.f};
          best_profile_s = q.x;
        }
        return q.f;
      };
      golden_min(profile, t1 - r1, t1 + r1, inner_tol);
      if (best_profile.f < f) {
        t1 = best_profile.x;
        s = best_profile_s;
        f = best_profile.f;
      }

      quiet = before - f < opt_.objective_tol ? quiet + 1 : 0;
      if (quiet >= 3) break;
      r1 *= opt_.shrink;
      r2 *= opt_.shrink;
    }
    return {t1, s, f};
  }

 private:
  const CentralPolygon& c_;
  const OracleOptions& opt_;
  double m_;
  int grid_;
  long evaluations_ = 0;
};

double wrap(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0.0) r += period;
  return r;
}

BMResult make_result(const CentralPolygon& c, double t1, double s, const OracleOptions& opt, double grid_lambda,
                     long evaluations) {
  const double period = static_cast<double>(c.size());
  const double t_u = wrap(t1, period);
  const double t_v = wrap(t1 + s, period);
  const Parallelogram p(boundary_point(c, t_u), boundary_point(c, t_v));
  const double lambda = circum_ratio(p, c);
  std::vector<Vec2> contacts;
  for (const auto& x : c.vertices()) {
    if (std::abs(gauge(p, x) - lambda) <= kContactWindow) contacts.push_back(x);
  }
  return {lambda, p, t_u, t_v, std::move(contacts), opt.grid, opt.refine, grid_lambda, evaluations};
}

void validate(const OracleOptions& opt) {
  if (opt.grid < 8) throw DomainError("bm_distance: grid must be >= 8, got " + std::to_string(opt.grid));
  if (opt.starts < 1) throw DomainError("bm_distance: need at least one refinement start");
  if (!(opt.shrink > 0.0 && opt.shrink < 1.0)) throw DomainError("bm_distance: shrink factor must be in (0, 1)");
}

}  // namespace

double inscribed_objective(const CentralPolygon& c, double t1, double t2) {
  const Vec2 u = boundary_point(c, t1);
  const Vec2 v = boundary_point(c, t2);
  if (!(cross(u, v) > 1e-12)) return kInf;
  return circum_ratio(Parallelogram(u, v), c);
}

BMResult bm_distance(const CentralPolygon& c, int grid, bool refine) {
  OracleOptions opt;
  opt.grid = grid;
  opt.refine = refine;
  return bm_distance(c, opt);
}

BMResult bm_distance(const CentralPolygon& c, const OracleOptions& opt) {
  validate(opt);
  Search search(c, opt);
  const std::vector<double> values = search.scan();

  const auto best_it = std::min_element(values.begin(), values.end());
  if (best_it == values.end() || !std::isfinite(*best_it)) {
    throw ConvergenceError("bm_distance: every grid cell is degenerate");
  }
  const auto best_idx = static_cast<std::size_t>(best_it - values.begin());
  const int bi = static_cast<int>(best_idx / (opt.grid - 1));
  const int bj = static_cast<int>(best_idx % (opt.grid - 1)) + 1;
  const double grid_lambda = *best_it;

  double t1 = search.t1_at(bi);
  double s = search.s_at(bj);
  double f = grid_lambda;

  if (opt.refine) {
    std::vector<Cell> starts;
    for (const auto& [cell, spread] : search.local_minima(values)) {
      if (static_cast<int>(starts.size()) >= opt.starts) break;
      starts.push_back(cell);
    }
    for (const Cell& start : starts) {
      const auto r = search.refine(search.t1_at(start.i), search.s_at(start.j), start.f);
      if (r.f < f) {
        t1 = r.t1;
        s = r.s;
        f = r.f;
      }
    }
  }
  return make_result(c, t1, s, opt, grid_lambda, search.evaluations());
}

std::vector<Parallelogram> argmin_orbit(const CentralPolygon& c, const BMResult& result, double tol,
                                        const OracleOptions& options) {
  OracleOptions opt = options;
  opt.grid = result.grid_resolution;
  validate(opt);
  Search search(c, opt);
  const std::vector<double> values = search.scan();

  struct Candidate {
    Parallelogram p;
    double f;
  };
  std::vector<Candidate> kept;
  for (const auto& [cell, spread] : search.local_minima(values)) {
    // A grid cell can sit above a nearby continuous minimum by at most about
    // the variation to its neighbours.
    if (cell.f > result.lambda + tol + spread) continue;
    const auto r = search.refine(search.t1_at(cell.i), search.s_at(cell.j), cell.f);
    if (r.f > result.lambda + tol) continue;
    kept.push_back({make_result(c, r.t1, r.s, opt, cell.f, 0).parallelogram, r.f});
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Candidate& a, const Candidate& b) { return a.f < b.f; });

  double scale = 0.0;
  for (const auto& v : c.vertices()) scale = std::max(scale, norm(v));
  const double cluster_tol = 1e-5 * scale;
  const std::vector<Mat2> group = symmetry_group(c, 1e-9 * std::max(1.0, scale));

  std::vector<Parallelogram> reps;
  for (const auto& cand : kept) {
    const bool known = std::any_of(reps.begin(), reps.end(), [&](const Parallelogram& rep) {
      return std::any_of(group.begin(), group.end(), [&](const Mat2& g) {
        return hausdorff_distance(cand.p.mapped(g), rep) <= cluster_tol;
      });
    });
    if (!known) reps.push_back(cand.p);
  }
  return reps;
}

std::string to_string(ClaimMode mode) { return mode == ClaimMode::exact ? "exact" : "upper_bound"; }

ClaimReport verify_claim(const CentralPolygon& c, double claimed, ClaimMode mode, double tol,
                         const OracleOptions& options) {
  if (!(claimed > 1.0)) throw DomainError("verify_claim: claimed distance must exceed 1");
  BMResult result = bm_distance(c, options);
  const double lambda = result.lambda;
  const bool pass = mode == ClaimMode::exact ? std::abs(lambda - claimed) <= tol : lambda <= claimed + tol;
  std::string note = mode == ClaimMode::upper_bound ? "conjecture support" : "";
  return {claimed, lambda, mode, tol, pass, claimed - lambda, std::move(note), std::move(result)};
}

}  // namespace bmdist
