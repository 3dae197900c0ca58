#include "etalab/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "etalab/errors.hpp"
#include "etalab/eta.hpp"
#include "etalab/parallel.hpp"

namespace etalab {

namespace {

// x/y coordinates of the chosen series at a strip point
std::complex<double> source_value(StripPoint p, SeriesSource source, const EvalConfig& config) {
  return source == SeriesSource::Eta ? eta(p.as_complex(), config).value
                                     : eta_reflected(p.as_complex(), config).value;
}

}  // namespace

std::string_view to_string(CurveFamily f) {
  return f == CurveFamily::SigmaConst ? "sigma-const" : "t-const";
}

std::string_view to_string(SeriesSource s) {
  return s == SeriesSource::Eta ? "eta" : "eta-reflected";
}

SeriesSource series_source_from_string(std::string_view name) {
  if (name == "eta") return SeriesSource::Eta;
  if (name == "eta-reflected") return SeriesSource::EtaReflected;
  throw std::invalid_argument("unknown series source: " + std::string(name));
}

void CurveTrace::validate() const {
  if (samples.size() < 2) throw ValidationError("CurveTrace: needs at least 2 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!std::isfinite(s.param) || !std::isfinite(s.x) || !std::isfinite(s.y))
      throw ValidationError("CurveTrace: non-finite sample");
    if (i > 0 && !(samples[i - 1].param < s.param))
      throw ValidationError("CurveTrace: params must be strictly increasing");
  }
  if (family == CurveFamily::SigmaConst) {
    if (!(fixed_value >= 0.0 && fixed_value <= 1.0))
      throw ValidationError("CurveTrace: sigma-const fixed value must lie in [0, 1]");
  } else {
    if (!(samples.front().param >= 0.0 && samples.back().param <= 1.0))
      throw ValidationError("CurveTrace: t-const params must lie in [0, 1]");
  }
}

std::string CurveTrace::id() const {
  std::ostringstream os;
  os << to_string(family) << "(" << fixed_value << ")/" << to_string(source);
  return os.str();
}

CurveTrace trace_sigma_curve(double alpha, double t_lo, double t_hi, int n_samples,
                             SeriesSource source, const EvalConfig& config) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("trace_sigma_curve: alpha must lie in [0, 1]");
  if (!(t_lo < t_hi)) throw std::invalid_argument("trace_sigma_curve: needs t_lo < t_hi");
  if (n_samples < 2) throw std::invalid_argument("trace_sigma_curve: needs n_samples >= 2");

  CurveTrace trace{CurveFamily::SigmaConst, alpha, source, {}};
  trace.samples.resize(n_samples);
  parallel_for(n_samples, [&](int i) {
    const double t = t_lo + (t_hi - t_lo) * i / (n_samples - 1);
    const auto z = source_value({alpha, t}, source, config);
    trace.samples[i] = {t, z.real(), z.imag()};
  });
  trace.validate();
  return trace;
}

CurveTrace trace_t_curve(double beta, int n_samples, SeriesSource source,
                         const EvalConfig& config) {
  if (n_samples < 2) throw std::invalid_argument("trace_t_curve: needs n_samples >= 2");

  CurveTrace trace{CurveFamily::TConst, beta, source, {}};
  trace.samples.resize(n_samples);
  parallel_for(n_samples, [&](int i) {
    const double sigma = static_cast<double>(i) / (n_samples - 1);
    const auto z = source_value({sigma, beta}, source, config);
    trace.samples[i] = {sigma, z.real(), z.imag()};
  });
  trace.validate();
  return trace;
}

OrthogonalityDiagnostic orthogonality_at(double alpha, double beta, const EvalConfig& config,
                                         double degeneracy_threshold, double fd_step) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("orthogonality_at: alpha must lie in [0, 1]");
  if (!(degeneracy_threshold > 0.0))
    throw std::invalid_argument("orthogonality_at: degeneracy threshold must be > 0");

  // the finite-difference slopes divide by coordinate increments of order
  // fd_step, so the evaluations need headroom below them
  EvalConfig tight = config;
  tight.tolerance = std::min(config.tolerance, 1e-13);

  const std::complex<double> d = eta_derivative({alpha, beta}, tight);
  const double u = d.real();
  const double v = -d.imag();

  OrthogonalityDiagnostic diag;
  diag.alpha = alpha;
  diag.beta = beta;
  diag.derivative_modulus = std::abs(d);
  diag.degenerate = diag.derivative_modulus < degeneracy_threshold ||
                    std::abs(u) < degeneracy_threshold || std::abs(v) < degeneracy_threshold;
  if (diag.derivative_modulus < degeneracy_threshold || u == 0.0 || v == 0.0) return diag;
  diag.product_computed = true;

  diag.slope_sigma_curve = u / v;
  diag.slope_t_curve = -v / u;

  const auto along_sigma_hi = eta({alpha, beta + fd_step}, tight).value;
  const auto along_sigma_lo = eta({alpha, beta - fd_step}, tight).value;
  const auto along_t_hi = eta({alpha + fd_step, beta}, tight).value;
  const auto along_t_lo = eta({alpha - fd_step, beta}, tight).value;
  const double fd_slope_sigma = (along_sigma_hi.imag() - along_sigma_lo.imag()) /
                                (along_sigma_hi.real() - along_sigma_lo.real());
  const double fd_slope_t =
      (along_t_hi.imag() - along_t_lo.imag()) / (along_t_hi.real() - along_t_lo.real());
  diag.product_residual = std::abs(fd_slope_sigma * fd_slope_t + 1.0);
  return diag;
}

MonotonicityReport monotonicity_check(const CurveTrace& trace) {
  trace.validate();
  if (trace.samples.size() < 3)
    throw std::invalid_argument("monotonicity_check: needs at least 3 samples");

  MonotonicityReport report;
  report.trace_id = trace.id();
  report.epsilon = (trace.samples.back().param - trace.samples.front().param) /
                   static_cast<double>(trace.samples.size() - 1);

  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = 0.0;
  double ratio_sum = 0.0;
  int count = 0;
  for (std::size_t n = 0; n + 2 < trace.samples.size(); ++n) {
    const auto& p0 = trace.samples[n];
    const auto& p1 = trace.samples[n + 1];
    const auto& p2 = trace.samples[n + 2];
    const double l1 = std::hypot(p1.x - p0.x, p1.y - p0.y);
    const double l2 = std::hypot(p2.x - p0.x, p2.y - p0.y);
    if (!(l1 < l2)) report.violations.push_back(static_cast<int>(n));
    const double ratio = l1 > 0.0 ? l2 / l1 : std::numeric_limits<double>::infinity();
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
    ratio_sum += ratio;
    ++count;
  }
  report.ratio_stats = {ratio_min, ratio_max, ratio_sum / count, count};
  return report;
}

}  // namespace etalab
