#include "etalab/eta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "etalab/acceleration.hpp"
#include "etalab/errors.hpp"
#include "etalab/gamma.hpp"

namespace etalab {

namespace {

using Cplx = std::complex<double>;

void require_finite(Cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw std::invalid_argument("eta: point must be finite");
}

// (-1)^{n-1} n^{-s}
Cplx series_term(Cplx s, int n) {
  if (n == 1) return {1.0, 0.0};
  const Cplx v = std::exp(-s * std::log(static_cast<double>(n)));
  return (n % 2 == 0) ? -v : v;
}

// (-1)^{n-1} (-ln n)^order n^{-s}
Cplx derivative_term(Cplx s, int n, int order) {
  if (n == 1) return {0.0, 0.0};
  const double ln = std::log(static_cast<double>(n));
  double factor = 1.0;
  for (int k = 0; k < order; ++k) factor *= -ln;
  const Cplx v = factor * std::exp(-s * ln);
  return (n % 2 == 0) ? -v : v;
}

// The oscillation of n^{-it} slows like t/n, so the stopping rule is only
// trusted past a term count proportional to |t|.
int aitken_min_terms(double t) {
  return std::max(16, static_cast<int>(std::ceil(2.0 * std::abs(t))));
}

int euler_min_terms(double t) {
  return std::max(8, static_cast<int>(std::ceil(std::abs(t))));
}

template <class TermFn>
EtaEvaluation run_accelerated(Cplx s, const EvalConfig& config, SummationMethod method,
                              TermFn&& term, const char* what) {
  AccelOptions opt{config.tolerance, config.max_terms, 0};
  AccelResult<Cplx> r;
  if (method == SummationMethod::EulerTransform) {
    opt.min_terms = euler_min_terms(s.imag());
    r = euler_sum<Cplx>(term, opt);
  } else {
    opt.min_terms = aitken_min_terms(s.imag());
    r = aitken_sum<Cplx>(term, opt);
  }
  EtaEvaluation ev{r.value, method, r.terms_used, r.error_estimate};
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << ": tolerance " << config.tolerance << " unreachable within " << r.terms_used
        << " terms at s = (" << s.real() << ", " << s.imag() << ")";
    throw NonConvergence(msg.str(), ev);
  }
  return ev;
}

}  // namespace

std::string_view to_string(SummationMethod m) {
  switch (m) {
    case SummationMethod::RawPartial: return "raw-partial";
    case SummationMethod::Aitken: return "aitken";
    case SummationMethod::EulerTransform: return "euler-transform";
  }
  return "unknown";
}

SummationMethod summation_method_from_string(std::string_view name) {
  if (name == "raw-partial") return SummationMethod::RawPartial;
  if (name == "aitken") return SummationMethod::Aitken;
  if (name == "euler-transform") return SummationMethod::EulerTransform;
  throw std::invalid_argument("unknown summation method: " + std::string(name));
}

std::complex<double> eta_partial_sum(Cplx s, int n_terms) {
  require_finite(s);
  if (n_terms < 1) throw std::invalid_argument("eta_partial_sum: n_terms must be >= 1");
  Cplx acc{0.0, 0.0};
  for (int n = 1; n <= n_terms; ++n) acc += series_term(s, n);
  return acc;
}

double alternating_tail_bound(double sigma, int n_terms) {
  if (!(sigma > 0.0)) throw std::domain_error("alternating_tail_bound: requires sigma > 0");
  if (n_terms < 1) throw std::invalid_argument("alternating_tail_bound: n_terms must be >= 1");
  return std::pow(static_cast<double>(n_terms) + 1.0, -sigma);
}

EtaEvaluation eta_summed(Cplx s, const EvalConfig& config, SummationMethod method) {
  require_finite(s);
  config.validate();
  switch (method) {
    case SummationMethod::RawPartial: {
      if (!(s.real() > 0.0) || s.imag() != 0.0)
        throw std::domain_error("eta_summed: raw-partial needs real s = sigma > 0");
      // run until the rigorous tail bound meets the tolerance
      Cplx acc{0.0, 0.0};
      for (int n = 1; n <= config.max_terms; ++n) {
        acc += series_term(s, n);
        const double bound = alternating_tail_bound(s.real(), n);
        if (bound <= config.tolerance)
          return {acc, SummationMethod::RawPartial, n, bound};
      }
      EtaEvaluation best{acc, SummationMethod::RawPartial, config.max_terms,
                         alternating_tail_bound(s.real(), config.max_terms)};
      throw NonConvergence("eta_summed: raw tail bound above tolerance at max_terms", best);
    }
    case SummationMethod::Aitken:
      if (!(s.real() > 0.0)) throw std::domain_error("eta_summed: aitken needs sigma > 0");
      return run_accelerated(s, config, SummationMethod::Aitken,
                             [s](int n) { return series_term(s, n); }, "eta");
    case SummationMethod::EulerTransform:
      if (s.real() < 0.0) throw std::domain_error("eta_summed: needs sigma >= 0");
      return run_accelerated(s, config, SummationMethod::EulerTransform,
                             [s](int n) { return series_term(s, n); }, "eta");
  }
  throw std::invalid_argument("eta_summed: unknown method");
}

EtaEvaluation eta(Cplx s, const EvalConfig& config) {
  require_finite(s);
  if (s.real() < 0.0) throw std::domain_error("eta: requires sigma >= 0");
  const SummationMethod method =
      s.real() == 0.0 ? SummationMethod::EulerTransform : SummationMethod::Aitken;
  return eta_summed(s, config, method);
}

EtaEvaluation eta_reflected(Cplx s, const EvalConfig& config) {
  require_finite(s);
  if (s.real() > 1.0) throw std::domain_error("eta_reflected: requires sigma <= 1");
  return eta(1.0 - s, config);
}

std::complex<double> eta_derivative(Cplx s, const EvalConfig& config, int order) {
  require_finite(s);
  config.validate();
  if (s.real() < 0.0) throw std::domain_error("eta_derivative: requires sigma >= 0");
  if (order < 1 || order > config.derivative_order_cap)
    throw std::invalid_argument("eta_derivative: order outside [1, derivative_order_cap]");
  const SummationMethod method =
      s.real() == 0.0 ? SummationMethod::EulerTransform : SummationMethod::Aitken;
  return run_accelerated(s, config, method,
                         [s, order](int n) { return derivative_term(s, n, order); },
                         "eta_derivative")
      .value;
}

FunctionalEquationSides functional_equation_sides(Cplx s, const EvalConfig& config) {
  require_finite(s);
  if (!(s.real() > 0.0 && s.real() < 1.0))
    throw std::domain_error("functional_equation: requires 0 < sigma < 1");
  const double ln_pi = std::log(std::numbers::pi);
  const double ln2 = std::numbers::ln2;
  const Cplx one{1.0, 0.0};
  const Cplx lhs = std::exp(-0.5 * s * ln_pi) * (one - std::exp(s * ln2)) *
                   std::exp(log_gamma(0.5 * s)) * eta(s, config).value;
  const Cplx rs = one - s;
  const Cplx rhs = std::exp(-0.5 * rs * ln_pi) * (one - std::exp(rs * ln2)) *
                   std::exp(log_gamma(0.5 * rs)) * eta(rs, config).value;
  const double residual = std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
  return {lhs, rhs, residual};
}

double functional_equation_residual(Cplx s, const EvalConfig& config) {
  return functional_equation_sides(s, config).residual;
}

std::complex<double> zeta_from_eta(Cplx s, const EvalConfig& config) {
  require_finite(s);
  if (!(s.real() > 0.0)) throw std::domain_error("zeta_from_eta: requires sigma > 0");
  const Cplx factor = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
  if (std::abs(factor) < 1e-8) {
    std::ostringstream msg;
    msg << "zeta_from_eta: singular point, |1 - 2^{1-s}| = " << std::abs(factor) << " at s = ("
        << s.real() << ", " << s.imag() << ")";
    throw SingularPoint(msg.str());
  }
  return eta(s, config).value / factor;
}

}  // namespace etalab
