#pragma once

#include <functional>
#include <string>

#include "gbd/convex.hpp"

namespace gbd {

// Set-valued monotone map on the line; images are intervals, empty off dom.
struct MonotoneOperator1D {
  std::string name;
  Interval dom;
  std::function<Interval(double)> apply;
};

MonotoneOperator1D identity_op();
MonotoneOperator1D log_op();
MonotoneOperator1D subdiff_op(const ConvexFunction1D& f);
MonotoneOperator1D negate(const MonotoneOperator1D& op);

enum class RepKind { Fitzpatrick, Sigma, FenchelYoung };

// Member of the Fitzpatrick family of its operator: convex, lsc,
// h(x, v) >= x v with equality exactly on the graph.
struct Representative {
  RepKind kind;
  std::string name;  // "f_id", "sigma_id", "f_log", "sigma_log", "fy_energy", "fy_ent", ...
  MonotoneOperator1D op;
  std::function<ExtReal(double, double)> eval;
};

// Smallest member for Id: x v + (x - v)^2 / 4.
Representative fitzpatrick_id();

// Largest member for Id: x v on the graph {x = v}, +inf elsewhere.
Representative sigma_id();

// Smallest member for log: x v + x (W(x e^{1-v}) + 1/W(x e^{1-v}) - 2) for
// x > 0, with the lower-closure value e^{v-1} on the x = 0 slice.
Representative fitzpatrick_log();

// Largest member for log, pinned down only through the distance it induces:
// x log x on {e^v <= x}, +inf elsewhere.
Representative sigma_log();

// Fenchel-Young representative f ⊕ f* of ∂f.
Representative fenchel_young(const ConvexFunction1D& f);

// Cross-check oracle: the defining supremum of the Fitzpatrick function
// evaluated over a grid of graph points (z, w), w in op(z). A lower bound of
// F_S(x, v) that tightens as the grid refines.
double fitzpatrick_bruteforce(const MonotoneOperator1D& op, double x, double v, double z_lo,
                              double z_hi, int n);

}  // namespace gbd
