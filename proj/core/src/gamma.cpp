#include "etalab/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace etalab {

namespace {

using Cplx = std::complex<double>;

// Lanczos g = 607/128, 15 terms (Godfrey's coefficient set).
constexpr double kG = 607.0 / 128.0;
constexpr std::array<double, 15> kCoeff = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;

// valid for Re(z) >= 0.5
Cplx lanczos_log_gamma(Cplx z) {
  const Cplx w = z - 1.0;
  Cplx sum{kCoeff[0], 0.0};
  for (std::size_t k = 1; k < kCoeff.size(); ++k) sum += kCoeff[k] / (w + static_cast<double>(k));
  const Cplx base = w + kG + 0.5;
  return (w + 0.5) * std::log(base) - base + kHalfLogTwoPi + std::log(sum);
}

}  // namespace

std::complex<double> log_gamma(Cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("log_gamma: argument must be finite");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // shift into the Lanczos domain: log G(z) = log G(z + k) - sum log(z + j).
  // For Im(z) != 0 the principal logs never cross the cut, so the principal
  // branch is preserved; for negative real z this continues from above.
  const int k = static_cast<int>(std::ceil(0.5 - z.real()));
  Cplx shift{0.0, 0.0};
  for (int j = 0; j < k; ++j) shift += std::log(z + static_cast<double>(j));
  return lanczos_log_gamma(z + static_cast<double>(k)) - shift;
}

}  // namespace etalab
