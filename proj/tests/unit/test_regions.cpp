#include <doctest.h>

#include "etalab/errors.hpp"
#include "etalab/geometry.hpp"
#include "etalab/regions.hpp"

using namespace etalab;

TEST_CASE("the built-in partition validates with 200-sample boundaries") {
  const auto regions = validate_partition(default_step_partition(), 200);
  REQUIRE(regions.size() == 6);
  for (const auto& region : regions) {
    CHECK_NOTHROW(region.validate());
    CHECK_FALSE(polyline_self_intersects(region.lower_boundary, 0.0));
    CHECK_FALSE(polyline_self_intersects(region.upper_boundary, 0.0));
    CHECK_FALSE(polylines_intersect(region.lower_boundary, region.upper_boundary, 0.0));
  }
  CHECK(regions.front().t_lo == 0.0);
  CHECK(regions.back().t_hi == 26.0);
}

TEST_CASE("partition argument validation") {
  const double decreasing[] = {0.0, 2.0, 1.0};
  CHECK_THROWS_AS(validate_partition(decreasing, 100), std::invalid_argument);
  const double single[] = {0.0};
  CHECK_THROWS_AS(validate_partition(single, 100), std::invalid_argument);
}

TEST_CASE("greedy build over [0, 26] yields a valid increasing partition") {
  const auto regions = build_regions(0.0, 26.0, 0.5, 120);
  REQUIRE_FALSE(regions.empty());
  double prev = 0.0;
  for (const auto& region : regions) {
    CHECK(region.t_lo == prev);
    CHECK(region.t_lo < region.t_hi);
    CHECK_NOTHROW(region.validate());
    prev = region.t_hi;
  }
  CHECK(prev <= 26.0);
}

TEST_CASE("degenerate interval is rejected") {
  CHECK_THROWS_AS(build_regions(5.0, 5.0, 0.5, 100), std::invalid_argument);
}

TEST_CASE("no reachable multiple of step means partition failure") {
  CHECK_THROWS_AS(build_regions(0.1, 0.2, 0.5, 100), PartitionFailure);
}

TEST_CASE("injectivity probe over the second step region") {
  const double bounds[] = {11.0, 15.0};
  const auto regions = validate_partition(bounds, 120);
  REQUIRE(regions.size() == 1);

  const auto report = injectivity_probe(regions.front(), 40);
  CHECK(report.colliding_pairs.empty());
  CHECK(report.min_image_separation > 1e-9);

  const auto corners = injectivity_probe(regions.front(), 2);
  CHECK(corners.colliding_pairs.empty());

  CHECK_THROWS_AS(injectivity_probe(regions.front(), 1), std::invalid_argument);
}

TEST_CASE("step region validation catches mismatched boundaries") {
  const double bounds[] = {11.0, 15.0};
  auto regions = validate_partition(bounds, 60);
  auto& region = regions.front();
  region.t_hi = 14.0;  // no longer matches the upper trace ordinate
  CHECK_THROWS_AS(region.validate(), ValidationError);
}
