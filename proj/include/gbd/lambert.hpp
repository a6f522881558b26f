#pragma once

namespace gbd {

// Principal branch of the Lambert W function on [-1/e, +inf): the w >= -1
// with w * exp(w) = x. Residual |w e^w - x| <= 1e-12 * (1 + |x|).
// Throws std::domain_error for NaN or x < -1/e (beyond a 1e-15 slack).
double lambert_w(double x);

}  // namespace gbd
