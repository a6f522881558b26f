#pragma once

#include <stdexcept>

#include "gbd/ext_real.hpp"

namespace gbd {

// Interval on the extended real line, possibly empty, possibly unbounded.
// Infinite endpoints are always open; the empty set is a distinguished state.
struct Interval {
  ExtReal lo{0.0};
  ExtReal hi{0.0};
  bool lo_closed = true;
  bool hi_closed = true;
  bool empty = false;

  static Interval empty_set() {
    Interval r;
    r.empty = true;
    return r;
  }

  static Interval make(ExtReal lo, bool lo_closed, ExtReal hi, bool hi_closed) {
    if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    Interval r;
    r.lo = lo;
    r.hi = hi;
    r.lo_closed = lo_closed && lo.is_finite();
    r.hi_closed = hi_closed && hi.is_finite();
    if (lo == hi && !(r.lo_closed && r.hi_closed)) return empty_set();
    return r;
  }

  static Interval closed(double lo, double hi) { return make(lo, true, hi, true); }
  static Interval point(double v) { return closed(v, v); }
  static Interval all() { return make(ExtReal::neg_inf(), false, ExtReal::pos_inf(), false); }
  static Interval ray_ge(double lo) { return make(lo, true, ExtReal::pos_inf(), false); }
  static Interval ray_gt(double lo) { return make(lo, false, ExtReal::pos_inf(), false); }
  static Interval ray_le(double hi) { return make(ExtReal::neg_inf(), false, hi, true); }

  bool contains(double x) const {
    if (empty) return false;
    if (x < lo.raw() || (x == lo.raw() && !lo_closed)) return false;
    if (x > hi.raw() || (x == hi.raw() && !hi_closed)) return false;
    return true;
  }

  bool is_point() const { return !empty && lo == hi; }
  bool bounded() const { return empty || (lo.is_finite() && hi.is_finite()); }

  double width() const {
    if (empty) return 0.0;
    return hi.raw() - lo.raw();
  }

  double midpoint() const {
    if (empty || !bounded()) throw std::logic_error("Interval: midpoint needs a nonempty bounded interval");
    return 0.5 * (lo.value() + hi.value());
  }

  Interval closure() const {
    if (empty) return *this;
    Interval r = *this;
    r.lo_closed = lo.is_finite();
    r.hi_closed = hi.is_finite();
    return r;
  }

  bool subset_of(const Interval& other) const {
    if (empty) return true;
    if (other.empty) return false;
    const bool lo_ok = lo > other.lo || (lo == other.lo && (other.lo_closed || !lo_closed));
    const bool hi_ok = hi < other.hi || (hi == other.hi && (other.hi_closed || !hi_closed));
    return lo_ok && hi_ok;
  }
};

}  // namespace gbd
