#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "etalab/eval.hpp"

namespace etalab {

enum class ZeroKind {
  CriticalLine,  ///< zero of eta on sigma = 1/2
  Sigma1Factor   ///< zero of the factor 1 - 2^{1-s} at sigma = 1, t = 2 pi k / ln 2
};

enum class RefinementMethod {
  Newton,           ///< damped Newton constrained to the critical line
  BisectionWinding, ///< bracket minimization fallback of |eta|
  ClosedForm        ///< sigma = 1 factor zeros, known in closed form
};

std::string_view to_string(ZeroKind k);
std::string_view to_string(RefinementMethod m);
ZeroKind zero_kind_from_string(std::string_view name);
RefinementMethod refinement_method_from_string(std::string_view name);

struct ZeroRecord {
  double sigma = 0.5;
  double t = 0.0;
  double residual = 0.0;  ///< |eta(sigma + i t)| at the reported point
  ZeroKind kind = ZeroKind::CriticalLine;
  RefinementMethod method = RefinementMethod::Newton;
  int iterations = 0;
};

bool operator==(const ZeroRecord& a, const ZeroRecord& b);

/// Axis-aligned rectangle in the (sigma, t) plane for argument-principle
/// counting. Must lie inside 0 < sigma (touching sigma = 1 is allowed only
/// when no factor zero sits on that edge).
struct Rectangle {
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
};

struct CatalogMetadata {
  double t_min = 0.0;
  double t_max = 0.0;
  double scan_step = 0.0;
  double scan_threshold = 0.0;
  std::string timestamp;  ///< optional; left empty for reproducible outputs
};

bool operator==(const CatalogMetadata& a, const CatalogMetadata& b);

struct ZeroCatalog {
  std::vector<ZeroRecord> records;  ///< sorted by (t, sigma)
  CatalogMetadata metadata;

  void sort();
  /// Throws ValidationError on invariant breach: wrong sigma for the kind,
  /// off-lattice factor ordinate, unsorted records, duplicate critical-line
  /// ordinates within 1e-6, or residual above acceptance_residual.
  void validate(double acceptance_residual = 1e-9) const;
};

struct Bracket {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// Samples |eta(1/2 + i t)| at the given step and returns one bracket around
/// every local minimum whose sample value is below threshold.
std::vector<Bracket> scan_critical_line(double t_lo, double t_hi, double step, double threshold,
                                        const EvalConfig& config = {});

/// Damped Newton iteration for eta(1/2 + i t) = 0 constrained to the line,
/// with a bracket-minimization fallback when Newton stalls. Throws
/// RefinementFailure (carrying the best iterate) when neither path reaches
/// acceptance_residual within max_iter.
ZeroRecord refine_zero_newton(double t0, const EvalConfig& config = {}, int max_iter = 50,
                              double acceptance_residual = 1e-9);

class RefinementFailure : public std::runtime_error {
 public:
  RefinementFailure(std::string what, ZeroRecord best_record)
      : std::runtime_error(std::move(what)), best(best_record) {}

  ZeroRecord best;
};

/// Number of zeros of eta (with multiplicity) inside the rectangle: total
/// boundary phase change divided by 2 pi, with adaptive edge subdivision
/// keeping every phase step below pi/2. Throws ContourTooClose if the
/// subdivision depth cap (20) is hit.
int winding_number(const Rectangle& rect, int initial_samples_per_edge,
                   const EvalConfig& config = {});

/// Zeros of the factor 1 - 2^{1-s} on sigma = 1: t = 2 pi k / ln 2 for all
/// integers k >= 1 with t <= t_max. Residuals are direct |eta| evaluations.
std::vector<ZeroRecord> sigma1_factor_zeros(double t_max, const EvalConfig& config = {});

/// JSON-lines persistence: one metadata line followed by one object per
/// record, 17-significant-digit decimals, sorted. load validates the catalog
/// and throws ParseError (with line number) or ValidationError.
void save_catalog(const ZeroCatalog& catalog, const std::filesystem::path& destination);
ZeroCatalog load_catalog(const std::filesystem::path& source);

}  // namespace etalab
