#include "gbd/representatives.hpp"

#include <cmath>
#include <stdexcept>

#include "gbd/lambert.hpp"

namespace gbd {

MonotoneOperator1D identity_op() {
  MonotoneOperator1D op;
  op.name = "id";
  op.dom = Interval::all();
  op.apply = [](double y) { return Interval::point(y); };
  return op;
}

MonotoneOperator1D log_op() {
  MonotoneOperator1D op;
  op.name = "log";
  op.dom = Interval::ray_gt(0.0);
  op.apply = [](double y) {
    if (y > 0.0) return Interval::point(std::log(y));
    return Interval::empty_set();
  };
  return op;
}

MonotoneOperator1D subdiff_op(const ConvexFunction1D& f) {
  MonotoneOperator1D op;
  op.name = "d_" + f.name;
  op.dom = f.dom_subdiff;
  op.apply = f.subdiff;
  return op;
}

MonotoneOperator1D negate(const MonotoneOperator1D& op) {
  MonotoneOperator1D neg;
  neg.name = "neg_" + op.name;
  neg.dom = op.dom;
  neg.apply = [inner = op.apply](double y) {
    const Interval img = inner(y);
    if (img.empty) return img;
    return Interval::make(ExtReal(-img.hi.raw()), img.hi_closed, ExtReal(-img.lo.raw()),
                          img.lo_closed);
  };
  return neg;
}

Representative fitzpatrick_id() {
  Representative h;
  h.kind = RepKind::Fitzpatrick;
  h.name = "f_id";
  h.op = identity_op();
  h.eval = [](double x, double v) -> ExtReal { return x * v + 0.25 * (x - v) * (x - v); };
  return h;
}

Representative sigma_id() {
  Representative h;
  h.kind = RepKind::Sigma;
  h.name = "sigma_id";
  h.op = identity_op();
  h.eval = [](double x, double v) -> ExtReal {
    if (x == v) return x * v;
    return ExtReal::pos_inf();
  };
  return h;
}

Representative fitzpatrick_log() {
  Representative h;
  h.kind = RepKind::Fitzpatrick;
  h.name = "f_log";
  h.op = log_op();
  h.eval = [](double x, double v) -> ExtReal {
    if (x < 0.0) return ExtReal::pos_inf();
    if (x == 0.0) return std::exp(v - 1.0);  // sup_z z (v - log z), attained at e^{v-1}
    const double w = lambert_w(x * std::exp(1.0 - v));
    return x * v + x * (w + 1.0 / w - 2.0);
  };
  return h;
}

Representative sigma_log() {
  Representative h;
  h.kind = RepKind::Sigma;
  h.name = "sigma_log";
  h.op = log_op();
  // The slice that matters: the induced distance x log x - x log y on
  // {0 < y <= x}. Off that sublevel set the largest member is +inf.
  h.eval = [](double x, double v) -> ExtReal {
    if (x > 0.0 && v <= std::log(x)) return x * std::log(x);
    return ExtReal::pos_inf();
  };
  return h;
}

Representative fenchel_young(const ConvexFunction1D& f) {
  Representative h;
  h.kind = RepKind::FenchelYoung;
  h.name = "fy_" + f.name;
  h.op = subdiff_op(f);
  h.eval = [eval = f.eval, conj = f.conj](double x, double v) -> ExtReal {
    return ext_add(eval(x), conj(v));
  };
  return h;
}

double fitzpatrick_bruteforce(const MonotoneOperator1D& op, double x, double v, double z_lo,
                              double z_hi, int n) {
  if (n < 2) throw std::invalid_argument("fitzpatrick_bruteforce: need n >= 2 grid points");
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double z = z_lo + (z_hi - z_lo) * i / (n - 1);
    const Interval img = op.apply(z);
    if (img.empty || !img.bounded()) continue;
    const double w = img.midpoint();
    best = std::max(best, (z - x) * (v - w) + x * v);
  }
  return best;
}

}  // namespace gbd
