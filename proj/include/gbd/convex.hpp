#pragma once

#include <functional>
#include <string>

#include "gbd/ext_real.hpp"
#include "gbd/interval.hpp"

namespace gbd {

// A proper lsc convex function on the real line, together with the pieces of
// convex calculus the library needs: Fenchel conjugate, subdifferential
// (always an interval in one dimension), and effective domains.
struct ConvexFunction1D {
  std::string name;    // catalog tag: "energy", "ent", "abs", "indicator", "linear"
  double param = 0.0;  // family parameter (shift center, slope); 0 when unused
  std::function<ExtReal(double)> eval;
  std::function<ExtReal(double)> conj;
  std::function<Interval(double)> subdiff;
  Interval dom;
  Interval dom_subdiff;
};

// x^2 / 2, self-conjugate, gradient Id.
ConvexFunction1D energy();

// Negative Boltzmann-Shannon entropy: x log x - x on (0, inf), 0 at 0, +inf
// below; conjugate exp, subgradient log on (0, inf) and empty at 0.
ConvexFunction1D boltzmann_shannon();

// |x - c|.
ConvexFunction1D abs_shift(double c);

// Indicator of a nonempty closed interval; conjugate is the support function,
// subdifferential the normal cone.
ConvexFunction1D indicator(const Interval& C);

// slope * x; conjugate is the indicator of {slope}.
ConvexFunction1D linear(double slope);

// Fenchel-Young characterization of the eps-subdifferential:
// f(x) + f*(v) <= x v + eps, up to tol.abs slack.
bool eps_subdiff_contains(const ConvexFunction1D& f, double x, double v, double eps,
                          const Tolerance& tol = Tolerance());

// The interval {v : f(x) + f*(v) - x v <= eps}, located by bisecting the
// Fenchel-Young gap outward from the subdifferential. Requires x in dom ∂f.
Interval eps_subdiff_interval(const ConvexFunction1D& f, double x, double eps);

}  // namespace gbd
