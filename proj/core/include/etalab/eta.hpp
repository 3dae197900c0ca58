#pragma once

#include <complex>

#include "etalab/eval.hpp"

namespace etalab {

/// Truncation of eta(s) = sum_{n>=1} (-1)^{n-1} n^{-s} after n_terms terms.
/// Real and imaginary parts are the truncated coordinate series
/// x(sigma,t) = sum (-1)^{n-1} n^{-sigma} cos(t ln n) and
/// y(sigma,t) = -sum (-1)^{n-1} n^{-sigma} sin(t ln n).
std::complex<double> eta_partial_sum(std::complex<double> s, int n_terms);

/// Rigorous alternating-series tail bound 1/(N+1)^sigma, valid for real
/// s = sigma > 0.
double alternating_tail_bound(double sigma, int n_terms);

/// eta(s) to within config.tolerance. Uses iterated Aitken delta-squared on
/// the partial sums for sigma > 0 and Euler-transform summation on the
/// boundary sigma = 0, where the raw series does not converge.
/// Requires sigma >= 0; throws NonConvergence (carrying the best value and
/// estimate) if the tolerance is unreachable within max_terms.
EtaEvaluation eta(std::complex<double> s, const EvalConfig& config = {});

/// Same contract as eta() but with the summation scheme forced.
EtaEvaluation eta_summed(std::complex<double> s, const EvalConfig& config, SummationMethod method);

/// eta(1-s). Requires sigma <= 1. Real and imaginary parts are the reflected
/// coordinate series (note the +sin sign in the imaginary part).
EtaEvaluation eta_reflected(std::complex<double> s, const EvalConfig& config = {});

/// Derivative of the given order by term-wise differentiation,
/// eta'(s) = sum_{n>=2} (-1)^n (ln n) n^{-s} and higher analogues.
/// Requires sigma >= 0 and 1 <= order <= config.derivative_order_cap.
std::complex<double> eta_derivative(std::complex<double> s, const EvalConfig& config = {},
                                    int order = 1);

/// Normalized residual |L - R| / (|L| + |R| + 1) of the reflection identity
///   pi^{-s/2} (1 - 2^s) Gamma(s/2) eta(s)
///     = pi^{-(1-s)/2} (1 - 2^{1-s}) Gamma((1-s)/2) eta(1-s)
/// for s strictly inside the strip 0 < sigma < 1.
double functional_equation_residual(std::complex<double> s, const EvalConfig& config = {});

struct FunctionalEquationSides {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double residual = 0.0;
};

/// Both sides of the reflection identity together with the residual.
FunctionalEquationSides functional_equation_sides(std::complex<double> s,
                                                  const EvalConfig& config = {});

/// zeta(s) = eta(s) / (1 - 2^{1-s}). Requires sigma > 0; throws SingularPoint
/// at s = 1 and wherever the factor 1 - 2^{1-s} vanishes
/// (s = 1 + 2 pi i k / ln 2, k != 0).
std::complex<double> zeta_from_eta(std::complex<double> s, const EvalConfig& config = {});

}  // namespace etalab
