#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gbd {

// Extended real number: a finite double or one of the two infinities.
// The finite payload is never NaN; NaN is rejected at construction.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(double v) : v_(v) {  // implicit by design, infinities allowed
    if (std::isnan(v)) throw std::domain_error("ExtReal: NaN is not an extended real");
  }

  static ExtReal pos_inf() { return ExtReal(std::numeric_limits<double>::infinity()); }
  static ExtReal neg_inf() { return ExtReal(-std::numeric_limits<double>::infinity()); }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
  bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }

  // Finite payload; calling this on an infinity is a programming error.
  double value() const {
    if (!is_finite()) throw std::logic_error("ExtReal: value() called on an infinity");
    return v_;
  }

  // Raw double, infinities included. Safe for comparison and printing.
  double raw() const { return v_; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

 private:
  double v_ = 0.0;
};

// Sum in [-inf, +inf]. PosInf + NegInf is a contract violation, not a value:
// the quantities added here (function values, scaled distances) never produce it.
inline ExtReal ext_add(ExtReal a, ExtReal b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw std::logic_error("ext_add: PosInf + NegInf");
  return ExtReal(a.raw() + b.raw());
}

// c * a for c > 0; infinities keep their sign.
inline ExtReal ext_scale(double c, ExtReal a) {
  if (std::isnan(c) || !(c > 0.0)) throw std::domain_error("ext_scale: scale must be positive");
  return ExtReal(c * a.raw());
}

// Absolute/relative comparison tolerance.
struct Tolerance {
  double abs;
  double rel;

  explicit Tolerance(double abs_tol = 1e-12, double rel_tol = 0.0) : abs(abs_tol), rel(rel_tol) {
    if (std::isnan(abs) || std::isnan(rel) || abs < 0 || rel < 0 || !(abs + rel > 0))
      throw std::invalid_argument("Tolerance: need abs, rel >= 0 and abs + rel > 0");
  }

  bool close(double a, double b) const {
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
  }
};

}  // namespace gbd
