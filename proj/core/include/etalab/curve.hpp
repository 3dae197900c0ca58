#pragma once

#include <string>
#include <vector>

#include "etalab/eval.hpp"

namespace etalab {

enum class CurveFamily { SigmaConst, TConst };
enum class SeriesSource { Eta, EtaReflected };

std::string_view to_string(CurveFamily f);
std::string_view to_string(SeriesSource s);
SeriesSource series_source_from_string(std::string_view name);

struct TraceSample {
  double param = 0.0;  ///< t for a sigma-const curve, sigma for a t-const curve
  double x = 0.0;
  double y = 0.0;
};

/// A sampled polyline image of a sigma = const or t = const curve in the
/// x-y plane. For family SigmaConst, param is t and fixed_value is the
/// abscissa alpha in [0, 1]; for TConst, param is sigma in [0, 1] and
/// fixed_value is the ordinate beta.
struct CurveTrace {
  CurveFamily family = CurveFamily::SigmaConst;
  double fixed_value = 0.0;
  SeriesSource source = SeriesSource::Eta;
  std::vector<TraceSample> samples;

  /// Throws ValidationError unless params are strictly increasing, there are
  /// at least 2 samples, all coordinates are finite, and the fixed value /
  /// param range matches the family.
  void validate() const;

  std::string id() const;  ///< short human-readable identifier
};

/// Trace of the curve sigma = alpha over t in [t_lo, t_hi], sampled at
/// n_samples uniform parameter values through the chosen series.
CurveTrace trace_sigma_curve(double alpha, double t_lo, double t_hi, int n_samples,
                             SeriesSource source, const EvalConfig& config = {});

/// Trace of the curve t = beta over sigma in [0, 1].
CurveTrace trace_t_curve(double beta, int n_samples, SeriesSource source,
                         const EvalConfig& config = {});

/// Tangent-slope diagnostic at the crossing of sigma = alpha and t = beta.
/// slope_sigma_curve = u/v and slope_t_curve = -v/u come from the term-wise
/// derivative (u = Re eta', v = -Im eta'); product_residual is computed from
/// finite-difference slopes of the traced curves, so the orthogonality test
/// does not reduce to algebra. Slopes and product are defined whenever
/// |eta'| clears the degeneracy threshold and neither u nor v is exactly 0.
struct OrthogonalityDiagnostic {
  double alpha = 0.0;
  double beta = 0.0;
  double slope_sigma_curve = 0.0;
  double slope_t_curve = 0.0;
  double product_residual = 0.0;
  double derivative_modulus = 0.0;  ///< |eta'(alpha + i beta)|
  bool degenerate = false;          ///< |eta'|, |u| or |v| below the threshold
  bool product_computed = false;
};

OrthogonalityDiagnostic orthogonality_at(double alpha, double beta, const EvalConfig& config = {},
                                         double degeneracy_threshold = 0.05,
                                         double fd_step = 1e-5);

struct RatioStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  int count = 0;
};

/// Chord-length ordering along a trace: for each sample n the distances
/// L_{n,n+1} and L_{n,n+2} to the next and next-but-one samples. A violation
/// is an index with L_{n,n+1} >= L_{n,n+2}.
struct MonotonicityReport {
  std::string trace_id;
  double epsilon = 0.0;  ///< parameter spacing of the trace
  std::vector<int> violations;
  RatioStats ratio_stats;  ///< statistics of L_{n,n+2} / L_{n,n+1}
};

MonotonicityReport monotonicity_check(const CurveTrace& trace);

}  // namespace etalab
