#pragma once

#include <utility>
#include <vector>

#include "gbd/representatives.hpp"

namespace gbd {

enum class Mode { Flat, Sharp };

// Generalized Bregman distance D_T^{*,h}: built from a representative h of S
// and an operator T, flat (inf over Ty) or sharp (sup over Ty), +inf off
// dom S x dom T. closed = true selects the lower-closed variant, available in
// closed form for the log catalog (the Id members are already lsc).
struct GbdSpec {
  Representative h;
  MonotoneOperator1D T;
  Mode mode = Mode::Flat;
  bool closed = false;

  const MonotoneOperator1D& S() const { return h.op; }
};

ExtReal gbd_eval(const GbdSpec& spec, double x, double y);

// Lower closure of the Kullback-Leibler divergence:
// x(log x - log y) - x + y for y > 0, x >= 0 (0 log 0 = 0); 0 at (0,0); +inf otherwise.
ExtReal closed_kl(double x, double y);

// Lower closure of the Fitzpatrick-log distance:
// +inf if x < 0, y < 0, or (x > 0 and y = 0); y/e on the x = 0 slice;
// x (W(xe/y) + 1/W(xe/y) - 2) otherwise.
ExtReal closed_fitz_log(double x, double y);

// Lower closure of the sigma-log distance:
// x log x - x log y for 0 < y <= x; 0 at (0,0); +inf otherwise.
ExtReal closed_sigma_log(double x, double y);

// Kiwiel-style Bregman distance f(x) - f(y) + inf/sup_{v in ∂f(y)} <y - x, v>.
ExtReal bregman_classic(const ConvexFunction1D& f, Mode mode, double x, double y);

struct DeviationReport {
  double max_dev = 0.0;
  bool pass = false;
};

// Max |D_{∂f}^{*, f⊕f*} - D_f^*| over the grid, both modes; passes at 1e-9.
// The grid must avoid (dom f \ dom ∂f) x dom ∂f, where the two differ.
DeviationReport gbd_equals_bregman_check(const ConvexFunction1D& f,
                                         const std::vector<std::pair<double, double>>& grid);

// v in S^h_eps x, i.e. h(x, v) - x v <= eps.
bool enlargement_contains(const Representative& h, double eps, double x, double v,
                          const Tolerance& tol = Tolerance());

// D^{flat,h}_{-T}(x, x) <= eps: the enlargement criterion for an approximate
// zero of Sx + Tx.
bool sum_zero_condition(const Representative& h, const MonotoneOperator1D& T, double eps,
                        double x);

// Sampled necessary condition for x to minimize f - g globally:
// D^{sharp, f⊕f*}_{∂_eps g}(x, x) <= eps for every eps in the grid. A finite
// grid cannot certify the full quantifier, so "true" is necessary, not sufficient.
bool dc_optimality_condition(const ConvexFunction1D& f, const ConvexFunction1D& g, double x,
                             const std::vector<double>& eps_grid);

}  // namespace gbd
