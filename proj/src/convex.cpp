#include "gbd/convex.hpp"

#include <cmath>
#include <stdexcept>

namespace gbd {

ConvexFunction1D energy() {
  ConvexFunction1D f;
  f.name = "energy";
  f.eval = [](double x) -> ExtReal { return 0.5 * x * x; };
  f.conj = [](double v) -> ExtReal { return 0.5 * v * v; };
  f.subdiff = [](double x) { return Interval::point(x); };
  f.dom = Interval::all();
  f.dom_subdiff = Interval::all();
  return f;
}

ConvexFunction1D boltzmann_shannon() {
  ConvexFunction1D f;
  f.name = "ent";
  f.eval = [](double x) -> ExtReal {
    if (x > 0.0) return x * std::log(x) - x;
    if (x == 0.0) return 0.0;
    return ExtReal::pos_inf();
  };
  f.conj = [](double v) -> ExtReal { return std::exp(v); };
  f.subdiff = [](double x) {
    if (x > 0.0) return Interval::point(std::log(x));
    return Interval::empty_set();
  };
  f.dom = Interval::ray_ge(0.0);
  f.dom_subdiff = Interval::ray_gt(0.0);
  return f;
}

ConvexFunction1D abs_shift(double c) {
  ConvexFunction1D f;
  f.name = "abs";
  f.param = c;
  f.eval = [c](double x) -> ExtReal { return std::abs(x - c); };
  f.conj = [c](double v) -> ExtReal {
    if (std::abs(v) <= 1.0) return c * v;
    return ExtReal::pos_inf();
  };
  f.subdiff = [c](double x) {
    if (x > c) return Interval::point(1.0);
    if (x < c) return Interval::point(-1.0);
    return Interval::closed(-1.0, 1.0);
  };
  f.dom = Interval::all();
  f.dom_subdiff = Interval::all();
  return f;
}

ConvexFunction1D indicator(const Interval& C) {
  if (C.empty) throw std::invalid_argument("indicator: set must be nonempty");
  const Interval S = C.closure();  // lsc indicator needs a closed set
  ConvexFunction1D f;
  f.name = "indicator";
  f.eval = [S](double x) -> ExtReal {
    return S.contains(x) ? ExtReal(0.0) : ExtReal::pos_inf();
  };
  f.conj = [S](double v) -> ExtReal {
    // support function sup_{x in S} x v
    if (v == 0.0) return 0.0;
    const ExtReal end = v > 0.0 ? S.hi : S.lo;
    if (!end.is_finite()) return ExtReal::pos_inf();
    return v * end.value();
  };
  f.subdiff = [S](double x) {
    if (!S.contains(x)) return Interval::empty_set();
    const bool at_lo = S.lo.is_finite() && x == S.lo.value();
    const bool at_hi = S.hi.is_finite() && x == S.hi.value();
    if (at_lo && at_hi) return Interval::all();
    if (at_lo) return Interval::ray_le(0.0);
    if (at_hi) return Interval::ray_ge(0.0);
    return Interval::point(0.0);
  };
  f.dom = S;
  f.dom_subdiff = S;
  return f;
}

ConvexFunction1D linear(double slope) {
  ConvexFunction1D f;
  f.name = "linear";
  f.param = slope;
  f.eval = [slope](double x) -> ExtReal { return slope * x; };
  f.conj = [slope](double v) -> ExtReal {
    return v == slope ? ExtReal(0.0) : ExtReal::pos_inf();
  };
  f.subdiff = [slope](double) { return Interval::point(slope); };
  f.dom = Interval::all();
  f.dom_subdiff = Interval::all();
  return f;
}

bool eps_subdiff_contains(const ConvexFunction1D& f, double x, double v, double eps,
                          const Tolerance& tol) {
  if (eps < 0) throw std::domain_error("eps_subdiff_contains: eps must be >= 0");
  const ExtReal lhs = ext_add(f.eval(x), f.conj(v));
  if (!lhs.is_finite()) return false;
  return lhs.value() <= x * v + eps + tol.abs;
}

namespace {

// Fenchel-Young gap of f at x as a function of the slope v; >= 0, zero exactly
// on the subdifferential.
ExtReal fy_gap(const ConvexFunction1D& f, double x, double v) {
  const ExtReal s = ext_add(f.eval(x), f.conj(v));
  if (!s.is_finite()) return s;
  return s.value() - x * v;
}

double bisect_gap_edge(const ConvexFunction1D& f, double x, double eps, double inside,
                       double outside) {
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (inside + outside);
    const ExtReal g = fy_gap(f, x, mid);
    if (g.is_finite() && g.value() <= eps)
      inside = mid;
    else
      outside = mid;
  }
  return inside;
}

}  // namespace

Interval eps_subdiff_interval(const ConvexFunction1D& f, double x, double eps) {
  if (eps < 0) throw std::domain_error("eps_subdiff_interval: eps must be >= 0");
  const Interval sub = f.subdiff(x);
  if (sub.empty) throw std::domain_error("eps_subdiff_interval: x outside dom ∂f");
  if (!sub.bounded())
    throw std::domain_error("eps_subdiff_interval: unbounded subdifferential");

  double lo = sub.lo.value();
  double hi = sub.hi.value();

  // Expand outward until the gap exceeds eps, then sharpen by bisection.
  double step = 1.0 + std::abs(hi);
  double probe = hi;
  bool unbounded = true;
  for (int i = 0; i < 200; ++i) {
    const ExtReal g = fy_gap(f, x, probe + step);
    if (!g.is_finite() || g.value() > eps) {
      hi = bisect_gap_edge(f, x, eps, probe, probe + step);
      unbounded = false;
      break;
    }
    probe += step;
    step *= 2.0;
  }
  if (unbounded) throw std::domain_error("eps_subdiff_interval: set unbounded above");

  step = 1.0 + std::abs(lo);
  probe = lo;
  unbounded = true;
  for (int i = 0; i < 200; ++i) {
    const ExtReal g = fy_gap(f, x, probe - step);
    if (!g.is_finite() || g.value() > eps) {
      lo = bisect_gap_edge(f, x, eps, probe, probe - step);
      unbounded = false;
      break;
    }
    probe -= step;
    step *= 2.0;
  }
  if (unbounded) throw std::domain_error("eps_subdiff_interval: set unbounded below");

  return Interval::closed(lo, hi);
}

}  // namespace gbd
