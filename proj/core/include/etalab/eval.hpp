#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string_view>

namespace etalab {

/// A point s = sigma + i t of the closed critical strip 0 <= sigma <= 1.
/// General-complex evaluation accepts any sigma >= 0; operations documented
/// as strip-only reject sigma outside [0, 1].
struct StripPoint {
  double sigma = 0.0;
  double t = 0.0;

  std::complex<double> as_complex() const { return {sigma, t}; }

  /// The reflected point 1 - s = (1 - sigma) - i t.
  StripPoint reflected() const { return {1.0 - sigma, -t}; }
};

enum class SummationMethod {
  RawPartial,     ///< plain truncated series
  Aitken,         ///< iterated Aitken delta-squared on the partial sums
  EulerTransform  ///< Euler summation by repeated averaging of partial sums
};

std::string_view to_string(SummationMethod m);
SummationMethod summation_method_from_string(std::string_view name);

struct EvalConfig {
  double tolerance = 1e-10;  ///< target absolute error
  int max_terms = 1'000'000;
  int derivative_order_cap = 4;

  void validate() const {
    if (!(tolerance > 0.0)) throw std::invalid_argument("EvalConfig: tolerance must be > 0");
    if (max_terms < 4) throw std::invalid_argument("EvalConfig: max_terms must be >= 4");
    if (derivative_order_cap < 1)
      throw std::invalid_argument("EvalConfig: derivative_order_cap must be >= 1");
  }
};

/// Result of evaluating eta(s) or eta(1-s).
///
/// error_estimate is the bound claimed by the stopping rule of the method
/// that produced the value: rigorous (first omitted term) for raw sums at
/// real s, heuristic (magnitude of the last corrections, floored at a few
/// ulps) for the accelerated methods.
struct EtaEvaluation {
  std::complex<double> value{0.0, 0.0};
  SummationMethod method = SummationMethod::Aitken;
  int terms_used = 0;
  double error_estimate = 0.0;
};

}  // namespace etalab
