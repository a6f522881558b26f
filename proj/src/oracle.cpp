#include "gbd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gbd {

SearchWindow full_line_window() { return SearchWindow{-50.0, 50.0}; }
SearchWindow half_line_window() { return SearchWindow{0.0, 50.0}; }

namespace {

void validate(const SearchWindow& w) {
  if (!(w.lo < w.hi)) throw std::invalid_argument("SearchWindow: lo must be < hi");
  if (w.coarse_points < 100) throw std::invalid_argument("SearchWindow: coarse_points must be >= 100");
  if (w.refine_rounds < 2) throw std::invalid_argument("SearchWindow: refine_rounds must be >= 2");
}

double finite_or_throw(const Objective& obj, double t, bool& finite) {
  const ExtReal v = obj(t);
  if (v.is_neg_inf()) throw std::logic_error("brute_min: objective took the value -inf");
  finite = v.is_finite();
  return finite ? v.value() : 0.0;
}

// Scans n evenly spaced points; keeps the leftmost strict minimum.
void scan(const Objective& obj, double lo, double hi, int n, bool& found, double& best_t,
          double& best_v) {
  for (int i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * i / (n - 1);
    bool finite = false;
    const double v = finite_or_throw(obj, t, finite);
    if (!finite) continue;
    if (!found || v < best_v) {
      found = true;
      best_v = v;
      best_t = t;
    }
  }
}

}  // namespace

BruteResult brute_min(const Objective& obj, const SearchWindow& w) {
  validate(w);
  bool found = false;
  double best_t = w.lo;
  double best_v = 0.0;
  scan(obj, w.lo, w.hi, w.coarse_points, found, best_t, best_v);
  if (!found) throw std::domain_error("empty effective domain");

  double spacing = (w.hi - w.lo) / (w.coarse_points - 1);
  for (int round = 0; round < w.refine_rounds; ++round) {
    const double lo = std::max(w.lo, best_t - 2.0 * spacing);
    const double hi = std::min(w.hi, best_t + 2.0 * spacing);
    if (!(lo < hi)) break;
    scan(obj, lo, hi, w.coarse_points, found, best_t, best_v);
    spacing = (hi - lo) / (w.coarse_points - 1);
  }
  return BruteResult{best_t, best_v};
}

namespace {

bool inside(const Objective& obj, double t, double thresh) {
  const ExtReal v = obj(t);
  return v.is_finite() && v.value() <= thresh;
}

// Bisects the sublevel-set boundary between an inside and an outside point.
double bisect_edge(const Objective& obj, double t_in, double t_out, double thresh) {
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (t_in + t_out);
    if (inside(obj, mid, thresh))
      t_in = mid;
    else
      t_out = mid;
  }
  return 0.5 * (t_in + t_out);
}

}  // namespace

Interval brute_interval_argmin(const Objective& obj, const SearchWindow& w, double slack) {
  if (!(slack >= 0)) throw std::invalid_argument("brute_interval_argmin: slack must be >= 0");
  const BruteResult m = brute_min(obj, w);
  const double thresh = m.value + slack;
  const int n = w.coarse_points;
  const double spacing = (w.hi - w.lo) / (n - 1);
  const auto grid = [&](int i) { return w.lo + spacing * i; };

  // Walk the coarse grid outward from the incumbent; the sublevel set of a
  // convex objective is an interval, so the first outside point bounds it.
  double in_lo = m.argmin;
  double in_hi = m.argmin;
  bool have_out_lo = false, have_out_hi = false;
  double out_lo = w.lo, out_hi = w.hi;

  const int start = static_cast<int>(std::floor((m.argmin - w.lo) / spacing));
  for (int i = std::min(start, n - 1); i >= 0; --i) {
    const double t = grid(i);
    if (t >= in_lo) continue;
    if (inside(obj, t, thresh)) {
      in_lo = t;
    } else {
      out_lo = t;
      have_out_lo = true;
      break;
    }
  }
  for (int i = std::max(start + 1, 0); i < n; ++i) {
    const double t = grid(i);
    if (t <= in_hi) continue;
    if (inside(obj, t, thresh)) {
      in_hi = t;
    } else {
      out_hi = t;
      have_out_hi = true;
      break;
    }
  }

  const double lo_edge = have_out_lo ? bisect_edge(obj, in_lo, out_lo, thresh) : in_lo;
  const double hi_edge = have_out_hi ? bisect_edge(obj, in_hi, out_hi, thresh) : in_hi;
  return Interval::closed(lo_edge, hi_edge);
}

}  // namespace gbd
