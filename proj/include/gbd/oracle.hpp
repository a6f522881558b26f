#pragma once

#include <functional>

#include "gbd/ext_real.hpp"
#include "gbd/interval.hpp"

namespace gbd {

// Search configuration for the brute-force scalar minimizer. The defaults
// resolve every catalog envelope on the tested (point, gamma) grids.
struct SearchWindow {
  double lo;
  double hi;
  int coarse_points = 2001;
  int refine_rounds = 4;
};

SearchWindow full_line_window();  // [-50, 50]
SearchWindow half_line_window();  // [0, 50]

using Objective = std::function<ExtReal(double)>;

struct BruteResult {
  double argmin;
  double value;
};

// Coarse grid scan followed by refine_rounds of shrinking-window scans around
// the incumbent (each refined window spans two coarse spacings either side).
// Infinite objective values are skipped, not treated as large finite numbers.
// Throws std::domain_error("empty effective domain") when the objective is
// +inf at every coarse grid point. Deterministic: ties keep the leftmost point.
BruteResult brute_min(const Objective& obj, const SearchWindow& w);

// Hull of the sublevel set {t : obj(t) <= min + slack}; the edges are
// sharpened by bisection between the last inside and first outside points, so
// flat argmin sets (set-valued proxes) are recovered to bisection accuracy.
Interval brute_interval_argmin(const Objective& obj, const SearchWindow& w, double slack);

}  // namespace gbd
