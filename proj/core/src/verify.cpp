#include "etalab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "etalab/acceleration.hpp"
#include "etalab/curve.hpp"
#include "etalab/errors.hpp"
#include "etalab/eta.hpp"
#include "etalab/geometry.hpp"
#include "etalab/io.hpp"
#include "etalab/parallel.hpp"
#include "etalab/regions.hpp"
#include "etalab/zeros.hpp"

namespace etalab {

namespace {

using Cplx = std::complex<double>;

constexpr const char* kFiniteRangeNote =
    "finite-range numerical evidence over the scanned window, not a proof for all t";

EvalConfig tightened(const EvalConfig& config, double floor_tol) {
  EvalConfig out = config;
  out.tolerance = std::min(config.tolerance, floor_tol);
  return out;
}

struct GridResidual {
  double value = 0.0;
  double sigma = 0.0;
  double t = 0.0;
};

// evaluates fn on every grid node in parallel and keeps the max residual
GridResidual max_over_grid(const GridSpec& grid,
                           const std::function<double(double, double)>& fn) {
  const int ns = static_cast<int>(grid.sigma_points.size());
  const int nt = static_cast<int>(grid.t_points.size());
  std::vector<double> residuals(static_cast<std::size_t>(ns) * nt);
  parallel_for(ns * nt, [&](int idx) {
    const double sigma = grid.sigma_points[idx / nt];
    const double t = grid.t_points[idx % nt];
    residuals[idx] = fn(sigma, t);
  });
  GridResidual worst;
  for (int idx = 0; idx < ns * nt; ++idx) {
    if (residuals[idx] >= worst.value) {
      worst = {residuals[idx], grid.sigma_points[idx / nt], grid.t_points[idx % nt]};
    }
  }
  return worst;
}

PropertyReport finish(PropertyReport report) {
  report.passed = report.max_residual < report.threshold;
  return report;
}

}  // namespace

GridSpec GridSpec::uniform(double sigma_lo, double sigma_hi, int n_sigma, double t_lo,
                           double t_hi, int n_t) {
  if (n_sigma < 1 || n_t < 1) throw std::invalid_argument("GridSpec: needs at least one point");
  GridSpec grid;
  for (int i = 0; i < n_sigma; ++i)
    grid.sigma_points.push_back(
        n_sigma == 1 ? sigma_lo : sigma_lo + (sigma_hi - sigma_lo) * i / (n_sigma - 1));
  for (int j = 0; j < n_t; ++j)
    grid.t_points.push_back(n_t == 1 ? t_lo : t_lo + (t_hi - t_lo) * j / (n_t - 1));
  grid.validate();
  return grid;
}

void GridSpec::validate() const {
  if (sigma_points.empty() || t_points.empty())
    throw std::invalid_argument("GridSpec: point lists must be nonempty");
  for (std::size_t i = 1; i < sigma_points.size(); ++i)
    if (!(sigma_points[i - 1] < sigma_points[i]))
      throw std::invalid_argument("GridSpec: sigma_points must be strictly increasing");
  for (std::size_t i = 1; i < t_points.size(); ++i)
    if (!(t_points[i - 1] < t_points[i]))
      throw std::invalid_argument("GridSpec: t_points must be strictly increasing");
}

PropertyReport check_symmetry(const GridSpec& grid, const VerifyConfig& config) {
  grid.validate();
  for (double sigma : grid.sigma_points)
    if (!(sigma >= 0.0 && sigma <= 1.0))
      throw std::invalid_argument("check_symmetry: sigma_points must lie in [0, 1]");

  PropertyReport report;
  report.check_name = "reflection-symmetry";
  report.grid = grid;
  report.threshold = config.symmetry_threshold_factor * config.eval.tolerance;
  const auto worst = max_over_grid(grid, [&](double sigma, double t) {
    // the reflected side goes through the Euler transform so the two sides
    // come from different summation processes, not a conjugate mirror
    const Cplx direct = eta(Cplx{1.0 - sigma, t}, config.eval).value;
    const Cplx reflected =
        eta_summed(Cplx{1.0 - sigma, -t}, config.eval, SummationMethod::EulerTransform).value;
    return std::max(std::abs(direct.real() - reflected.real()),
                    std::abs(direct.imag() + reflected.imag()));
  });
  report.max_residual = worst.value;
  report.worst_sigma = worst.sigma;
  report.worst_t = worst.t;
  return finish(std::move(report));
}

namespace {

double cauchy_riemann_residual(double sigma, double t, double h, const EvalConfig& eval) {
  const Cplx sp = eta(Cplx{sigma + h, t}, eval).value;
  const Cplx sm = eta(Cplx{sigma - h, t}, eval).value;
  const Cplx tp = eta(Cplx{sigma, t + h}, eval).value;
  const Cplx tm = eta(Cplx{sigma, t - h}, eval).value;
  const double dx_dsigma = (sp.real() - sm.real()) / (2.0 * h);
  const double dy_dsigma = (sp.imag() - sm.imag()) / (2.0 * h);
  const double dx_dt = (tp.real() - tm.real()) / (2.0 * h);
  const double dy_dt = (tp.imag() - tm.imag()) / (2.0 * h);
  return std::max(std::abs(dx_dsigma - dy_dt), std::abs(dx_dt + dy_dsigma));
}

}  // namespace

PropertyReport check_cauchy_riemann(const GridSpec& grid, double h, const VerifyConfig& config) {
  grid.validate();
  if (!(h > 0.0)) throw std::invalid_argument("check_cauchy_riemann: needs h > 0");
  constexpr double kCalibrationH = 1e-4;
  const double widest = std::max(h, kCalibrationH);
  for (double sigma : grid.sigma_points)
    if (!(sigma > widest && sigma < 1.0 - widest))
      throw std::invalid_argument("check_cauchy_riemann: grid must be interior to (h, 1-h)");

  const EvalConfig tight = tightened(config.eval, 1e-13);
  const auto calibration =
      max_over_grid(grid, [&](double s, double t) { return cauchy_riemann_residual(s, t, kCalibrationH, tight); });
  const double c_constant = 4.0 * calibration.value / (kCalibrationH * kCalibrationH);

  PropertyReport report;
  report.check_name = "cauchy-riemann";
  report.grid = grid;
  report.threshold = c_constant * h * h;
  const auto worst = (h == kCalibrationH)
                         ? calibration
                         : max_over_grid(grid, [&](double s, double t) {
                             return cauchy_riemann_residual(s, t, h, tight);
                           });
  report.max_residual = worst.value;
  report.worst_sigma = worst.sigma;
  report.worst_t = worst.t;
  report.details = {{"calibration_residual_at_h_1e-4", calibration.value},
                    {"calibration_constant", c_constant},
                    {"h", h}};
  return finish(std::move(report));
}

PropertyReport check_functional_equation(const GridSpec& grid, const VerifyConfig& config) {
  grid.validate();
  for (double sigma : grid.sigma_points)
    if (!(sigma > 0.0 && sigma < 1.0))
      throw std::invalid_argument(
          "check_functional_equation: grid must lie strictly inside the open strip");

  const EvalConfig tight = tightened(config.eval, 1e-10);
  PropertyReport report;
  report.check_name = "functional-equation";
  report.grid = grid;
  report.threshold = config.fe_threshold;
  const auto worst = max_over_grid(
      grid, [&](double s, double t) { return functional_equation_residual(Cplx{s, t}, tight); });
  report.max_residual = worst.value;
  report.worst_sigma = worst.sigma;
  report.worst_t = worst.t;
  return finish(std::move(report));
}

namespace {

// Euler-summed branch-cut difference series; the boundary pair alpha1 = 0 has
// non-decaying terms, which the averaging still sums.
double branch_cut_sum(double a1, double a2, double t_star, bool use_sin,
                      const EvalConfig& eval) {
  AccelOptions opt{std::min(eval.tolerance, 1e-12), eval.max_terms,
                   std::max(8, static_cast<int>(std::ceil(std::abs(t_star))))};
  const auto term = [=](int n) {
    const double ln = std::log(static_cast<double>(n));
    const double weight = std::pow(static_cast<double>(n), -a1) - std::pow(static_cast<double>(n), -a2);
    const double osc = use_sin ? std::sin(t_star * ln) : std::cos(t_star * ln);
    const double v = weight * osc;
    return (n % 2 == 0) ? -v : v;
  };
  const auto res = euler_sum<double>(term, opt);
  if (!res.converged)
    throw NonConvergence("branch_cut_sum: Euler summation did not converge",
                         EtaEvaluation{{res.value, 0.0}, SummationMethod::EulerTransform,
                                       res.terms_used, res.error_estimate});
  return res.value;
}

}  // namespace

PropertyReport check_branch_cut_sums(double t_star, int n_alpha, const VerifyConfig& config) {
  if (n_alpha < 2) throw std::invalid_argument("check_branch_cut_sums: needs n_alpha >= 2");
  const double delta = 0.5 / n_alpha;
  const EvalConfig tight = tightened(config.eval, 1e-13);

  GridSpec lattice;  // sigma_points carries the alpha1 lattice, t_points the alpha2 lattice
  for (int i = 0; i < n_alpha; ++i)
    lattice.sigma_points.push_back((0.5 - delta) * i / (n_alpha - 1));
  for (int j = 0; j < n_alpha; ++j)
    lattice.t_points.push_back((0.5 + delta) + (0.5 - delta) * j / (n_alpha - 1));

  struct PairResult {
    double witness = 0.0;
    double discrepancy = 0.0;
  };
  const int total = n_alpha * n_alpha;
  std::vector<PairResult> results(total);
  parallel_for(total, [&](int idx) {
    const double a1 = lattice.sigma_points[idx / n_alpha];
    const double a2 = lattice.t_points[idx % n_alpha];
    const double s_cos = branch_cut_sum(a1, a2, t_star, false, config.eval);
    const double s_sin = branch_cut_sum(a1, a2, t_star, true, config.eval);
    const Cplx delta_eta = eta(Cplx{a1, t_star}, tight).value - eta(Cplx{a2, t_star}, tight).value;
    results[idx].witness = std::max(std::abs(s_cos), std::abs(s_sin));
    results[idx].discrepancy =
        std::max(std::abs(s_cos - delta_eta.real()), std::abs(s_sin + delta_eta.imag()));
  });

  double witness_min = std::numeric_limits<double>::infinity();
  double disc_max = 0.0;
  int worst_idx = 0;
  for (int idx = 0; idx < total; ++idx) {
    witness_min = std::min(witness_min, results[idx].witness);
    if (results[idx].discrepancy >= disc_max) {
      disc_max = results[idx].discrepancy;
      worst_idx = idx;
    }
  }

  PropertyReport report;
  std::ostringstream name;
  name << "branch-cut-sums(t*=" << format_g17(t_star) << ")";
  report.check_name = name.str();
  report.grid = lattice;
  report.threshold = config.branch_cut_identity_threshold;
  // both conditions must hold; a failed witness forces the residual over the
  // threshold so the passed <=> residual < threshold invariant stays intact
  report.max_residual = witness_min > config.branch_cut_witness_threshold
                            ? disc_max
                            : std::max(disc_max, report.threshold);
  report.worst_sigma = lattice.sigma_points[worst_idx / n_alpha];
  report.worst_t = t_star;
  report.note = kFiniteRangeNote;
  report.details = {{"witness_min", witness_min},
                    {"witness_threshold", config.branch_cut_witness_threshold},
                    {"worst_alpha2", lattice.t_points[worst_idx % n_alpha]},
                    {"identity_discrepancy_max", disc_max}};
  return finish(std::move(report));
}

namespace {

PropertyReport guarded(const std::string& name, const std::function<PropertyReport()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    PropertyReport report;
    report.check_name = name;
    report.max_residual = std::numeric_limits<double>::infinity();
    report.threshold = 1.0;
    report.passed = false;
    report.note = std::string("check aborted: ") + e.what();
    return report;
  }
}

std::vector<ZeroRecord> fresh_critical_zeros(const VerifyConfig& config) {
  const auto brackets = scan_critical_line(0.0, config.census_t_max, config.zero_scan_step,
                                           config.zero_scan_threshold, config.eval);
  std::vector<ZeroRecord> zeros;
  zeros.reserve(brackets.size());
  for (const auto& b : brackets)
    zeros.push_back(refine_zero_newton(0.5 * (b.t_lo + b.t_hi), config.eval, 50,
                                       config.zero_acceptance_residual));
  return zeros;
}

PropertyReport census_consistency(const std::vector<ZeroRecord>& zeros,
                                  const VerifyConfig& config) {
  PropertyReport report;
  report.check_name = "zero-census-consistency";
  report.threshold = 0.5;
  report.note = kFiniteRangeNote;

  double mismatch = 0.0;
  double worst_window = 0.0;
  const int n_windows =
      static_cast<int>(std::ceil(config.census_t_max / config.census_window - 1e-9));
  for (int w = 0; w < n_windows; ++w) {
    const double lo = w * config.census_window;
    const double hi = std::min(config.census_t_max, (w + 1) * config.census_window);
    const int counted = static_cast<int>(
        std::count_if(zeros.begin(), zeros.end(), [&](const ZeroRecord& z) {
          return z.kind == ZeroKind::CriticalLine && z.t >= lo && z.t < hi;
        }));
    const Rectangle rect{config.census_margin, 1.0 - config.census_margin, lo, hi};
    const int wound = winding_number(rect, 64, tightened(config.eval, 1e-10));
    const double miss = std::abs(wound - counted);
    if (miss >= mismatch) {
      mismatch = std::max(mismatch, miss);
      worst_window = lo;
    }
    report.details.emplace_back("window_" + format_g17(lo) + "_count", counted);
    report.details.emplace_back("window_" + format_g17(lo) + "_winding", wound);
  }
  report.max_residual = mismatch;
  report.worst_sigma = 0.5;
  report.worst_t = worst_window;
  return finish(std::move(report));
}

PropertyReport mirror_zero_check(const std::vector<ZeroRecord>& zeros,
                                 const VerifyConfig& config) {
  PropertyReport report;
  report.check_name = "mirror-zeros";
  report.threshold = 10.0 * config.zero_acceptance_residual;
  const EvalConfig tight = tightened(config.eval, 1e-12);
  double worst = 0.0, worst_t = 0.0;
  for (const auto& z : zeros) {
    if (z.kind != ZeroKind::CriticalLine) continue;
    const double r = std::abs(eta_reflected(Cplx{z.sigma, z.t}, tight).value);
    if (r >= worst) {
      worst = r;
      worst_t = z.t;
    }
  }
  report.max_residual = worst;
  report.worst_sigma = 0.5;
  report.worst_t = worst_t;
  return finish(std::move(report));
}

PropertyReport functional_equation_at_zeros(const std::vector<ZeroRecord>& zeros,
                                            const VerifyConfig& config) {
  PropertyReport report;
  report.check_name = "functional-equation-at-zeros";
  report.threshold = config.fe_threshold;
  constexpr double kSideModulusBound = 1e-5;
  const EvalConfig tight = tightened(config.eval, 1e-10);
  double worst = 0.0, worst_t = 0.0, side_max = 0.0;
  for (const auto& z : zeros) {
    if (z.kind != ZeroKind::CriticalLine) continue;
    const auto sides = functional_equation_sides(Cplx{z.sigma, z.t}, tight);
    side_max = std::max({side_max, std::abs(sides.lhs), std::abs(sides.rhs)});
    if (sides.residual >= worst) {
      worst = sides.residual;
      worst_t = z.t;
    }
  }
  report.max_residual = side_max < kSideModulusBound ? worst : std::max(worst, report.threshold);
  report.worst_sigma = 0.5;
  report.worst_t = worst_t;
  report.details = {{"max_side_modulus", side_max},
                    {"side_modulus_bound", kSideModulusBound}};
  return finish(std::move(report));
}

PropertyReport orthogonality_sweep(const VerifyConfig& config) {
  const GridSpec grid = GridSpec::uniform(0.1, 0.9, 9, 11.0, 15.0, 9);
  PropertyReport report;
  report.check_name = "orthogonality";
  report.grid = grid;
  report.threshold = config.orthogonality_threshold;

  const int ns = static_cast<int>(grid.sigma_points.size());
  const int nt = static_cast<int>(grid.t_points.size());
  std::vector<OrthogonalityDiagnostic> diags(static_cast<std::size_t>(ns) * nt);
  parallel_for(ns * nt, [&](int idx) {
    diags[idx] = orthogonality_at(grid.sigma_points[idx / nt], grid.t_points[idx % nt],
                                  config.eval, config.degeneracy_threshold,
                                  config.orthogonality_fd_step);
  });
  double worst = 0.0, worst_sigma = grid.sigma_points.front(), worst_t = grid.t_points.front();
  int degenerate = 0;
  for (const auto& d : diags) {
    if (d.degenerate) ++degenerate;
    if (!d.product_computed) continue;  // only |eta'| below threshold excludes a point
    if (d.product_residual >= worst) {
      worst = d.product_residual;
      worst_sigma = d.alpha;
      worst_t = d.beta;
    }
  }
  report.max_residual = worst;
  report.worst_sigma = worst_sigma;
  report.worst_t = worst_t;
  report.details = {{"degenerate_points", static_cast<double>(degenerate)},
                    {"degeneracy_threshold", config.degeneracy_threshold}};
  return finish(std::move(report));
}

PropertyReport region_partition_check(const VerifyConfig& config) {
  PropertyReport report;
  report.check_name = "region-partition";
  report.threshold = 0.5;
  report.worst_sigma = 0.0;
  try {
    const auto regions =
        validate_partition(default_step_partition(), config.region_trace_samples, config.eval);
    report.max_residual = 0.0;
    report.details = {{"regions", static_cast<double>(regions.size())}};
  } catch (const ValidationError& e) {
    report.max_residual = 1.0;
    report.note = e.what();
  }
  return finish(std::move(report));
}

PropertyReport monotonicity_sweep(const VerifyConfig& config) {
  PropertyReport report;
  report.check_name = "monotonicity";
  report.threshold = 0.5;

  const auto boundaries = default_step_partition();
  std::vector<CurveTrace> traces;
  for (double beta : boundaries)
    traces.push_back(
        trace_t_curve(beta, config.monotonicity_samples, SeriesSource::Eta, config.eval));
  constexpr std::array<double, 5> kAlphas = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    for (double alpha : kAlphas)
      traces.push_back(trace_sigma_curve(alpha, boundaries[i], boundaries[i + 1],
                                         config.monotonicity_samples, SeriesSource::Eta,
                                         config.eval));
  }

  int total_violations = 0;
  double worst_fixed = 0.0, worst_param = 0.0;
  for (const auto& trace : traces) {
    const auto mono = monotonicity_check(trace);
    if (!mono.violations.empty() && total_violations == 0) {
      worst_fixed = trace.fixed_value;
      worst_param = trace.samples[mono.violations.front()].param;
    }
    total_violations += static_cast<int>(mono.violations.size());
  }
  report.max_residual = total_violations;
  report.worst_sigma = worst_fixed;
  report.worst_t = worst_param;
  report.details = {{"traces", static_cast<double>(traces.size())},
                    {"samples_per_trace", static_cast<double>(config.monotonicity_samples)}};
  return finish(std::move(report));
}

}  // namespace

VerificationReport run_all(const VerifyConfig& config,
                           const std::optional<std::filesystem::path>& catalog_path) {
  VerificationReport report;

  // zero list: the catalog when one is given and loads, a fresh scan otherwise
  std::vector<ZeroRecord> zeros;
  std::string catalog_error;
  if (catalog_path) {
    try {
      zeros = load_catalog(*catalog_path).records;
    } catch (const std::exception& e) {
      catalog_error = e.what();
    }
  }
  if (zeros.empty() && catalog_error.empty() && catalog_path)
    catalog_error = "catalog contains no records";
  if (!catalog_path || !catalog_error.empty()) {
    try {
      zeros = fresh_critical_zeros(config);
    } catch (const std::exception& e) {
      catalog_error = e.what();
    }
  }

  report.checks.push_back(guarded("reflection-symmetry", [&] {
    return check_symmetry(GridSpec::uniform(0.0, 1.0, 20, 0.0, 30.0, 20), config);
  }));
  report.checks.push_back(guarded("cauchy-riemann", [&] {
    return check_cauchy_riemann(GridSpec::uniform(0.1, 0.9, 9, 1.0, 29.0, 9),
                                config.cauchy_riemann_h, config);
  }));
  {
    // convergence-order companion: residual(1e-4) / residual(h) should be
    // close to (1e-4 / h)^2
    PropertyReport order;
    order.check_name = "cauchy-riemann-order";
    order.threshold = 0.5;
    const auto& cr = report.checks.back();
    if (cr.passed && cr.max_residual > 0.0 && !cr.details.empty()) {
      const double calibration = cr.details.front().second;
      const double expected = std::pow(1e-4 / config.cauchy_riemann_h, 2.0);
      const double ratio = calibration / cr.max_residual;
      order.max_residual = std::abs(ratio - expected);
      order.details = {{"observed_ratio", ratio}, {"expected_ratio", expected}};
      order.passed = order.max_residual < order.threshold;
    } else {
      order.max_residual = std::numeric_limits<double>::infinity();
      order.passed = false;
      order.note = "cauchy-riemann residuals unavailable";
    }
    report.checks.push_back(std::move(order));
  }
  report.checks.push_back(guarded("functional-equation", [&] {
    return check_functional_equation(GridSpec::uniform(0.1, 0.9, 9, 0.5, 29.5, 9), config);
  }));
  report.checks.push_back(guarded("orthogonality", [&] { return orthogonality_sweep(config); }));
  report.checks.push_back(
      guarded("region-partition", [&] { return region_partition_check(config); }));
  report.checks.push_back(guarded("monotonicity", [&] { return monotonicity_sweep(config); }));

  std::vector<double> branch_cut_ordinates;
  for (const auto& z : zeros)
    if (z.kind == ZeroKind::CriticalLine) branch_cut_ordinates.push_back(z.t);
  branch_cut_ordinates.insert(branch_cut_ordinates.end(), {5.0, 10.0, 20.0});
  for (double t_star : branch_cut_ordinates) {
    std::ostringstream name;
    name << "branch-cut-sums(t*=" << format_g17(t_star) << ")";
    report.checks.push_back(
        guarded(name.str(), [&] { return check_branch_cut_sums(t_star, 10, config); }));
  }

  report.checks.push_back(guarded("zero-census-consistency", [&] {
    if (!catalog_error.empty())
      throw ValidationError("catalog unusable: " + catalog_error);
    return census_consistency(zeros, config);
  }));
  report.checks.push_back(
      guarded("mirror-zeros", [&] { return mirror_zero_check(zeros, config); }));
  report.checks.push_back(guarded("functional-equation-at-zeros",
                                  [&] { return functional_equation_at_zeros(zeros, config); }));

  report.all_passed =
      std::all_of(report.checks.begin(), report.checks.end(),
                  [](const PropertyReport& r) { return r.passed; });
  return report;
}

namespace {

nlohmann::ordered_json report_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["passed"] = r.passed;
  j["max_residual"] = r.max_residual;
  j["threshold"] = r.threshold;
  j["worst_point"] = {{"sigma", r.worst_sigma}, {"t", r.worst_t}};
  j["grid"] = {{"sigma_points", r.grid.sigma_points}, {"t_points", r.grid.t_points}};
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.details.empty()) {
    nlohmann::ordered_json d;
    for (const auto& [key, value] : r.details) d[key] = value;
    j["details"] = d;
  }
  return j;
}

}  // namespace

std::string report_to_json(const PropertyReport& report) { return report_json(report).dump(2); }

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["all_passed"] = report.all_passed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) j["checks"].push_back(report_json(c));
  return j.dump(2);
}

}  // namespace etalab
