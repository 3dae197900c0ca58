#include "etalab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "etalab/errors.hpp"
#include "etalab/eta.hpp"
#include "etalab/parallel.hpp"

namespace etalab {

namespace {

using Cplx = std::complex<double>;

constexpr int kContourDepthCap = 20;
constexpr double kFallbackHalfWidth = 0.5;

EvalConfig tightened(const EvalConfig& config, double floor_tol) {
  EvalConfig out = config;
  out.tolerance = std::min(config.tolerance, floor_tol);
  return out;
}

double abs_eta_on_line(double t, const EvalConfig& config) {
  return std::abs(eta({0.5, t}, config).value);
}

// golden-section minimization of |eta(1/2 + i t)| on [lo, hi]
std::pair<double, int> minimize_on_bracket(double lo, double hi, const EvalConfig& config,
                                           int max_iter) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = abs_eta_on_line(c, config);
  double fd = abs_eta_on_line(d, config);
  int it = 0;
  while (b - a > 1e-12 && it < max_iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = abs_eta_on_line(c, config);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = abs_eta_on_line(d, config);
    }
    ++it;
  }
  return {0.5 * (a + b), it};
}

}  // namespace

std::string_view to_string(ZeroKind k) {
  return k == ZeroKind::CriticalLine ? "critical-line" : "sigma1-factor";
}

std::string_view to_string(RefinementMethod m) {
  switch (m) {
    case RefinementMethod::Newton: return "newton";
    case RefinementMethod::BisectionWinding: return "bisection-winding";
    case RefinementMethod::ClosedForm: return "closed-form";
  }
  return "unknown";
}

ZeroKind zero_kind_from_string(std::string_view name) {
  if (name == "critical-line") return ZeroKind::CriticalLine;
  if (name == "sigma1-factor") return ZeroKind::Sigma1Factor;
  throw std::invalid_argument("unknown zero kind: " + std::string(name));
}

RefinementMethod refinement_method_from_string(std::string_view name) {
  if (name == "newton") return RefinementMethod::Newton;
  if (name == "bisection-winding") return RefinementMethod::BisectionWinding;
  if (name == "closed-form") return RefinementMethod::ClosedForm;
  throw std::invalid_argument("unknown refinement method: " + std::string(name));
}

bool operator==(const ZeroRecord& a, const ZeroRecord& b) {
  return a.sigma == b.sigma && a.t == b.t && a.residual == b.residual && a.kind == b.kind &&
         a.method == b.method && a.iterations == b.iterations;
}

bool operator==(const CatalogMetadata& a, const CatalogMetadata& b) {
  return a.t_min == b.t_min && a.t_max == b.t_max && a.scan_step == b.scan_step &&
         a.scan_threshold == b.scan_threshold && a.timestamp == b.timestamp;
}

void ZeroCatalog::sort() {
  std::stable_sort(records.begin(), records.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.sigma < b.sigma;
  });
}

void ZeroCatalog::validate(double acceptance_residual) const {
  const double ln2 = std::numbers::ln2;
  double prev_critical_t = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i > 0) {
      const auto& p = records[i - 1];
      if (r.t < p.t || (r.t == p.t && r.sigma < p.sigma))
        throw ValidationError("ZeroCatalog: records not sorted by (t, sigma)");
    }
    if (!(r.residual >= 0.0) || r.residual > acceptance_residual) {
      std::ostringstream msg;
      msg << "ZeroCatalog: record residual " << r.residual << " above acceptance "
          << acceptance_residual;
      throw ValidationError(msg.str());
    }
    if (r.kind == ZeroKind::CriticalLine) {
      if (r.sigma != 0.5)
        throw ValidationError("ZeroCatalog: critical-line record with sigma != 0.5");
      if (r.t - prev_critical_t < 1e-6)
        throw ValidationError("ZeroCatalog: duplicate critical-line ordinates within 1e-6");
      prev_critical_t = r.t;
    } else {
      if (r.sigma != 1.0)
        throw ValidationError("ZeroCatalog: sigma1-factor record with sigma != 1");
      const double k = r.t * ln2 / (2.0 * std::numbers::pi);
      if (std::abs(k - std::round(k)) > 1e-9 || std::round(k) < 1.0)
        throw ValidationError("ZeroCatalog: sigma1-factor ordinate not of the form 2 pi k / ln 2");
    }
  }
}

std::vector<Bracket> scan_critical_line(double t_lo, double t_hi, double step, double threshold,
                                        const EvalConfig& config) {
  if (!(t_lo < t_hi)) throw std::invalid_argument("scan_critical_line: needs t_lo < t_hi");
  if (!(step > 0.0)) throw std::invalid_argument("scan_critical_line: needs step > 0");
  if (!(threshold > 0.0)) throw std::invalid_argument("scan_critical_line: needs threshold > 0");

  const int n = static_cast<int>(std::floor((t_hi - t_lo) / step + 1e-9)) + 1;
  std::vector<double> values(n);
  parallel_for(n, [&](int k) { values[k] = abs_eta_on_line(t_lo + k * step, config); });

  std::vector<Bracket> brackets;
  for (int k = 1; k + 1 < n; ++k) {
    if (values[k] < threshold && values[k] < values[k - 1] && values[k] <= values[k + 1])
      brackets.push_back({t_lo + (k - 1) * step, t_lo + (k + 1) * step});
  }
  return brackets;
}

ZeroRecord refine_zero_newton(double t0, const EvalConfig& config, int max_iter,
                              double acceptance_residual) {
  if (max_iter < 1) throw std::invalid_argument("refine_zero_newton: needs max_iter >= 1");
  if (!(acceptance_residual > 0.0))
    throw std::invalid_argument("refine_zero_newton: needs acceptance_residual > 0");
  const EvalConfig tight = tightened(config, 1e-12);

  double t = t0;
  double residual = abs_eta_on_line(t, tight);
  int iters = 0;
  bool newton_ok = true;
  while (iters < max_iter && residual >= acceptance_residual) {
    const Cplx g = eta({0.5, t}, tight).value;
    const Cplx gp = Cplx{0.0, 1.0} * eta_derivative({0.5, t}, tight);
    if (std::abs(gp) < 1e-14) {
      newton_ok = false;
      break;
    }
    const double step = (g / gp).real();
    double scale = 1.0;
    bool improved = false;
    for (int trial = 0; trial < 6; ++trial) {
      const double t_next = t - scale * step;
      const double r_next = abs_eta_on_line(t_next, tight);
      if (r_next < residual) {
        t = t_next;
        residual = r_next;
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    ++iters;
    if (!improved || std::abs(t - t0) > 1.0) {
      newton_ok = false;
      break;
    }
  }
  if (newton_ok && residual < acceptance_residual)
    return {0.5, t, residual, ZeroKind::CriticalLine, RefinementMethod::Newton, iters};

  // fallback: shrink the bracket around t0 on |eta|
  const auto [t_min, used] =
      minimize_on_bracket(t0 - kFallbackHalfWidth, t0 + kFallbackHalfWidth, tight, 200);
  const double r_min = abs_eta_on_line(t_min, tight);
  ZeroRecord best{0.5, t_min, r_min, ZeroKind::CriticalLine, RefinementMethod::BisectionWinding,
                  used};
  if (r_min < acceptance_residual) return best;
  std::ostringstream msg;
  msg << "refine_zero_newton: no zero below residual " << acceptance_residual << " near t0 = "
      << t0 << " (best |eta| = " << r_min << " at t = " << t_min << ")";
  throw RefinementFailure(msg.str(), best);
}

namespace {

struct ContourPoint {
  Cplx s;
  Cplx w;
};

// phase change along one sampled step, subdividing until each piece turns
// by less than pi/2
double phase_walk(const ContourPoint& a, const ContourPoint& b, const EvalConfig& config,
                  int depth) {
  if (std::abs(a.w) == 0.0 || std::abs(b.w) == 0.0)
    throw ContourTooClose("winding_number: eta vanishes on the contour");
  const double step = std::arg(b.w / a.w);
  if (std::abs(step) < std::numbers::pi / 2.0) return step;
  if (depth >= kContourDepthCap)
    throw ContourTooClose("winding_number: subdivision depth cap hit; boundary too close to a zero");
  const Cplx mid = 0.5 * (a.s + b.s);
  const ContourPoint m{mid, eta(mid, config).value};
  return phase_walk(a, m, config, depth + 1) + phase_walk(m, b, config, depth + 1);
}

}  // namespace

int winding_number(const Rectangle& rect, int initial_samples_per_edge, const EvalConfig& config) {
  if (!(rect.sigma_lo < rect.sigma_hi) || !(rect.t_lo < rect.t_hi))
    throw std::invalid_argument("winding_number: degenerate rectangle");
  if (!(rect.sigma_lo > 0.0) || rect.sigma_hi > 1.0)
    throw std::invalid_argument("winding_number: rectangle must satisfy 0 < sigma_lo, sigma_hi <= 1");
  if (initial_samples_per_edge < 1)
    throw std::invalid_argument("winding_number: needs at least 1 sample per edge");

  const std::array<Cplx, 5> corners = {
      Cplx{rect.sigma_lo, rect.t_lo}, Cplx{rect.sigma_hi, rect.t_lo},
      Cplx{rect.sigma_hi, rect.t_hi}, Cplx{rect.sigma_lo, rect.t_hi},
      Cplx{rect.sigma_lo, rect.t_lo}};

  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    ContourPoint prev{corners[e], eta(corners[e], config).value};
    for (int k = 1; k <= initial_samples_per_edge; ++k) {
      const Cplx s = corners[e] + (corners[e + 1] - corners[e]) *
                                      (static_cast<double>(k) / initial_samples_per_edge);
      const ContourPoint cur{s, eta(s, config).value};
      total += phase_walk(prev, cur, config, 0);
      prev = cur;
    }
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const long long count = std::llround(turns);
  if (std::abs(turns - static_cast<double>(count)) > 0.1)
    throw ContourTooClose("winding_number: phase sum is not an integer multiple of 2 pi");
  return static_cast<int>(count);
}

std::vector<ZeroRecord> sigma1_factor_zeros(double t_max, const EvalConfig& config) {
  if (!(t_max > 0.0)) throw std::invalid_argument("sigma1_factor_zeros: needs t_max > 0");
  const double spacing = 2.0 * std::numbers::pi / std::numbers::ln2;
  std::vector<ZeroRecord> records;
  for (int k = 1; k * spacing <= t_max; ++k) {
    const double t = k * spacing;
    const double residual = std::abs(eta({1.0, t}, config).value);
    records.push_back({1.0, t, residual, ZeroKind::Sigma1Factor, RefinementMethod::ClosedForm, 0});
  }
  return records;
}

}  // namespace etalab
