#include "etalab/regions.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "etalab/errors.hpp"
#include "etalab/eta.hpp"
#include "etalab/geometry.hpp"
#include "etalab/parallel.hpp"

namespace etalab {

namespace {

constexpr std::array<double, 7> kDefaultPartition = {0.0, 11.0, 15.0, 18.5, 21.0, 24.0, 26.0};

StepRegion make_region(int index_m, double t_lo, double t_hi, CurveTrace lower, CurveTrace upper) {
  return {index_m, t_lo, t_hi, std::move(lower), std::move(upper)};
}

}  // namespace

void StepRegion::validate(double tol) const {
  if (!(t_lo < t_hi)) throw ValidationError("StepRegion: needs t_lo < t_hi");
  lower_boundary.validate();
  upper_boundary.validate();
  if (lower_boundary.family != CurveFamily::TConst || upper_boundary.family != CurveFamily::TConst)
    throw ValidationError("StepRegion: boundaries must be t-const traces");
  if (lower_boundary.fixed_value != t_lo || upper_boundary.fixed_value != t_hi)
    throw ValidationError("StepRegion: boundary ordinates do not match t_lo/t_hi");
  if (polyline_self_intersects(lower_boundary, tol))
    throw ValidationError("StepRegion: lower boundary self-intersects");
  if (polyline_self_intersects(upper_boundary, tol))
    throw ValidationError("StepRegion: upper boundary self-intersects");
  if (polylines_intersect(lower_boundary, upper_boundary, tol))
    throw ValidationError("StepRegion: boundaries intersect each other");
}

std::span<const double> default_step_partition() { return kDefaultPartition; }

std::vector<StepRegion> validate_partition(std::span<const double> boundaries, int n_samples,
                                           const EvalConfig& config) {
  if (boundaries.size() < 2)
    throw std::invalid_argument("validate_partition: needs at least 2 boundaries");
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (!(boundaries[i - 1] < boundaries[i]))
      throw std::invalid_argument("validate_partition: boundaries must be strictly increasing");
  }
  if (n_samples < 2) throw std::invalid_argument("validate_partition: needs n_samples >= 2");

  std::vector<CurveTrace> traces(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i)
    traces[i] = trace_t_curve(boundaries[i], n_samples, SeriesSource::Eta, config);

  std::vector<StepRegion> regions;
  regions.reserve(boundaries.size() - 1);
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    StepRegion region = make_region(static_cast<int>(i) + 1, boundaries[i], boundaries[i + 1],
                                    traces[i], traces[i + 1]);
    try {
      region.validate();
    } catch (const ValidationError& e) {
      std::ostringstream msg;
      msg << "validate_partition: region " << (i + 1) << " over [" << boundaries[i] << ", "
          << boundaries[i + 1] << "] invalid: " << e.what();
      throw ValidationError(msg.str());
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

std::vector<StepRegion> build_regions(double t_start, double t_max, double step, int n_samples,
                                      const EvalConfig& config) {
  if (!(t_start < t_max)) throw std::invalid_argument("build_regions: needs t_start < t_max");
  if (!(step > 0.0)) throw std::invalid_argument("build_regions: needs step > 0");
  if (n_samples < 2) throw std::invalid_argument("build_regions: needs n_samples >= 2");

  std::map<long long, CurveTrace> cache;
  const auto candidate_trace = [&](long long k) -> const CurveTrace& {
    auto it = cache.find(k);
    if (it == cache.end())
      it = cache.emplace(k, trace_t_curve(k * step, n_samples, SeriesSource::Eta, config)).first;
    return it->second;
  };

  CurveTrace lower = trace_t_curve(t_start, n_samples, SeriesSource::Eta, config);
  if (polyline_self_intersects(lower, 0.0))
    throw PartitionFailure("build_regions: trace at t_start self-intersects");

  const long long k_max = static_cast<long long>(std::floor(t_max / step + 1e-9));
  std::vector<StepRegion> regions;
  double t_cur = t_start;
  while (t_cur < t_max) {
    const long long k_min = static_cast<long long>(std::floor(t_cur / step + 1e-9)) + 1;
    long long found = -1;
    for (long long k = k_max; k >= k_min; --k) {
      if (!(k * step > t_cur)) break;
      const CurveTrace& upper = candidate_trace(k);
      if (polyline_self_intersects(upper, 0.0)) continue;
      if (polylines_intersect(lower, upper, 0.0)) continue;
      found = k;
      break;
    }
    if (found < 0) {
      if (regions.empty())
        throw PartitionFailure("build_regions: no valid first extension at the given step");
      break;  // maximal partition reached
    }
    const double t_next = found * step;
    StepRegion region = make_region(static_cast<int>(regions.size()) + 1, t_cur, t_next, lower,
                                    candidate_trace(found));
    region.validate();
    lower = region.upper_boundary;
    regions.push_back(std::move(region));
    t_cur = t_next;
  }
  return regions;
}

InjectivityReport injectivity_probe(const StepRegion& region, int grid_n,
                                    const EvalConfig& config, double collision_tol) {
  if (grid_n < 2) throw std::invalid_argument("injectivity_probe: needs grid_n >= 2");
  region.validate();

  const int total = grid_n * grid_n;
  std::vector<std::complex<double>> images(total);
  parallel_for(total, [&](int idx) {
    const int i = idx / grid_n;
    const int j = idx % grid_n;
    const double sigma = static_cast<double>(i) / (grid_n - 1);
    const double t = region.t_lo + (region.t_hi - region.t_lo) * j / (grid_n - 1);
    images[idx] = eta({sigma, t}, config).value;
  });

  InjectivityReport report;
  report.min_image_separation = std::numeric_limits<double>::infinity();
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      const double dist = std::abs(images[a] - images[b]);
      report.min_image_separation = std::min(report.min_image_separation, dist);
      if (dist < collision_tol)
        report.colliding_pairs.push_back(
            {a / grid_n, a % grid_n, b / grid_n, b % grid_n, dist});
    }
  }
  return report;
}

}  // namespace etalab
