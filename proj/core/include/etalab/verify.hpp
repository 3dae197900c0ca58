#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etalab/eval.hpp"

namespace etalab {

struct GridSpec {
  std::vector<double> sigma_points;
  std::vector<double> t_points;

  static GridSpec uniform(double sigma_lo, double sigma_hi, int n_sigma, double t_lo, double t_hi,
                          int n_t);
  void validate() const;  ///< strictly increasing, nonempty
};

/// Outcome of one numerical check. passed is always equivalent to
/// max_residual < threshold; auxiliary quantities (witnesses, calibration
/// constants) are carried in details.
struct PropertyReport {
  std::string check_name;
  GridSpec grid;
  double max_residual = 0.0;
  double worst_sigma = 0.0;
  double worst_t = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string note;  ///< e.g. finite-range qualifier, or the error that aborted the check
  std::vector<std::pair<std::string, double>> details;
};

struct VerifyConfig {
  EvalConfig eval;

  double symmetry_threshold_factor = 4.0;   ///< threshold = factor * eval.tolerance
  double fe_threshold = 1e-8;
  double orthogonality_threshold = 1e-4;
  double orthogonality_fd_step = 1e-5;
  double degeneracy_threshold = 0.05;
  double branch_cut_witness_threshold = 1e-6;
  double branch_cut_identity_threshold = 1e-9;
  double cauchy_riemann_h = 5e-5;           ///< evaluation step; calibration runs at 1e-4
  int region_trace_samples = 200;
  int monotonicity_samples = 500;
  double zero_scan_step = 0.01;
  double zero_scan_threshold = 0.1;
  double zero_acceptance_residual = 1e-9;
  double census_t_max = 30.0;
  double census_window = 5.0;
  double census_margin = 0.05;              ///< rectangle inset from sigma = 0 and 1
};

/// Max over the grid of |x(1-sigma,t) - x_Q(sigma,t)| and
/// |y(1-sigma,t) + y_Q(sigma,t)|, the two sides computed independently from
/// the direct and the reflected series. Threshold 4 * tolerance.
PropertyReport check_symmetry(const GridSpec& grid, const VerifyConfig& config = {});

/// Central-difference Cauchy-Riemann residuals at step h, thresholded at
/// C h^2 where C is calibrated from the observed residual at h = 1e-4
/// (times 4). The calibration constant is reported in details.
PropertyReport check_cauchy_riemann(const GridSpec& grid, double h,
                                    const VerifyConfig& config = {});

/// Max normalized functional-equation residual over a grid strictly inside
/// the open strip. Threshold 1e-8.
PropertyReport check_functional_equation(const GridSpec& grid, const VerifyConfig& config = {});

/// Branch-cut difference sums at ordinate t_star: over an (alpha1, alpha2)
/// lattice with alpha1 in [0, 1/2 - delta], alpha2 in [1/2 + delta, 1],
/// delta = 0.5/n_alpha, computes the accelerated sums
///   S_cos = sum (-1)^{n-1} (n^{-a1} - n^{-a2}) cos(t* ln n)
///   S_sin = sum (-1)^{n-1} (n^{-a1} - n^{-a2}) sin(t* ln n)
/// and cross-checks S_cos - i S_sin against eta(a1 + i t*) - eta(a2 + i t*).
/// Passes when the identity discrepancy stays below 1e-9 on every pair AND
/// the positivity witness min max(|S_cos|, |S_sin|) exceeds 1e-6. The
/// witness and its threshold are reported in details.
PropertyReport check_branch_cut_sums(double t_star, int n_alpha, const VerifyConfig& config = {});

struct VerificationReport {
  std::vector<PropertyReport> checks;
  bool all_passed = false;
};

/// Runs the whole battery in a fixed declared order: symmetry,
/// Cauchy-Riemann (residual and convergence order), functional equation,
/// orthogonality sweep, region partition, monotonicity sweep, branch-cut
/// sums at every catalogued zero ordinate plus {5, 10, 20}, and the
/// zero-census cross-checks (window counts vs winding numbers, mirror zeros,
/// functional equation at zeros). Individual check failures are recorded,
/// never fatal. When catalog_path is given the catalog is loaded from it
/// (a corrupt file fails the census cross-check and the remaining checks
/// fall back to a fresh scan); otherwise the scan runs in-process.
VerificationReport run_all(const VerifyConfig& config = {},
                           const std::optional<std::filesystem::path>& catalog_path = std::nullopt);

/// Deterministic JSON rendering (fixed key order, fixed check order).
std::string report_to_json(const VerificationReport& report);
std::string report_to_json(const PropertyReport& report);

}  // namespace etalab
