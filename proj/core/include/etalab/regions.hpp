#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "etalab/curve.hpp"

namespace etalab {

/// The strip slab [0,1] x [t_lo, t_hi] together with the traced images of its
/// two t = const boundary curves. A valid region has non-self-intersecting
/// boundary traces that do not intersect each other.
struct StepRegion {
  int index_m = 1;
  double t_lo = 0.0;
  double t_hi = 0.0;
  CurveTrace lower_boundary;
  CurveTrace upper_boundary;

  /// Throws ValidationError on any invariant breach.
  void validate(double tol = 0.0) const;
};

/// The built-in boundary list {0, 11, 15, 18.5, 21, 24, 26} used for figure
/// emission and as the default validated partition.
std::span<const double> default_step_partition();

/// Builds regions from an explicit strictly increasing boundary list,
/// verifying every invariant. Throws ValidationError naming the offending
/// boundary or pair.
std::vector<StepRegion> validate_partition(std::span<const double> boundaries, int n_samples,
                                           const EvalConfig& config = {});

/// Greedy maximal partition of [t_start, t_max]: each next boundary is the
/// largest multiple of step whose trace is non-self-intersecting and does not
/// intersect the previous boundary trace. Throws PartitionFailure when no
/// valid first extension exists (the caller refines step); a later dead end
/// simply ends the partition.
std::vector<StepRegion> build_regions(double t_start, double t_max, double step = 0.25,
                                      int n_samples = 200, const EvalConfig& config = {});

struct GridCollision {
  int i1 = 0, j1 = 0;
  int i2 = 0, j2 = 0;
  double distance = 0.0;
};

struct InjectivityReport {
  double min_image_separation = 0.0;
  std::vector<GridCollision> colliding_pairs;
};

/// Maps a grid_n x grid_n lattice of (sigma, t) over [0,1] x [t_lo, t_hi]
/// through eta and reports the minimum pairwise image distance plus any pair
/// of distinct lattice points whose images coincide within collision_tol.
InjectivityReport injectivity_probe(const StepRegion& region, int grid_n,
                                    const EvalConfig& config = {},
                                    double collision_tol = 1e-9);

}  // namespace etalab
