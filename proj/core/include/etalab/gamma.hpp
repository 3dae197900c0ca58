#pragma once

#include <complex>

namespace etalab {

/// Principal-branch log-gamma. Lanczos rational approximation (g = 607/128,
/// 15 terms) for Re(z) >= 0.5, recurrence shift otherwise. Absolute accuracy
/// around 1e-13 for |z| <= 100. Throws std::domain_error at the poles
/// z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace etalab
