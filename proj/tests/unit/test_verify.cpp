#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "etalab/verify.hpp"

using namespace etalab;
namespace fs = std::filesystem;

TEST_CASE("grid construction and validation") {
  const auto grid = GridSpec::uniform(0.1, 0.9, 9, 1.0, 29.0, 9);
  CHECK(grid.sigma_points.size() == 9);
  CHECK(grid.t_points.front() == 1.0);
  CHECK(grid.t_points.back() == 29.0);

  GridSpec empty;
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
  GridSpec unsorted{{0.5, 0.4}, {1.0}};
  CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);
}

TEST_CASE("symmetry check over a small grid") {
  const auto report = check_symmetry(GridSpec::uniform(0.0, 1.0, 8, 0.0, 30.0, 8));
  CHECK(report.passed);
  CHECK(report.max_residual < 4e-10);
  CHECK(report.threshold == 4e-10);
}

TEST_CASE("symmetry at sigma = 1/2 is an identity up to evaluation noise") {
  GridSpec point{{0.5}, {9.0}};
  const auto report = check_symmetry(point);
  CHECK(report.passed);
  CHECK(report.max_residual < 2e-10);
}

TEST_CASE("symmetry rejects out-of-strip grids") {
  CHECK_THROWS_AS(check_symmetry(GridSpec{{-0.1, 0.5}, {1.0}}), std::invalid_argument);
}

TEST_CASE("cauchy-riemann residual shrinks like h^2") {
  const auto grid = GridSpec::uniform(0.2, 0.8, 4, 2.0, 26.0, 4);
  const auto at_h = check_cauchy_riemann(grid, 1e-4);
  CHECK(at_h.passed);
  const auto at_half = check_cauchy_riemann(grid, 5e-5);
  CHECK(at_half.passed);
  const double ratio = at_h.max_residual / at_half.max_residual;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("cauchy-riemann needs an interior grid") {
  CHECK_THROWS_AS(check_cauchy_riemann(GridSpec{{1e-5, 0.5}, {1.0}}, 1e-4),
                  std::invalid_argument);
}

TEST_CASE("functional equation check over the interior grid") {
  const auto report = check_functional_equation(GridSpec::uniform(0.1, 0.9, 5, 0.5, 29.5, 5));
  CHECK(report.passed);
  CHECK(report.max_residual < 1e-8);
  CHECK_THROWS_AS(check_functional_equation(GridSpec{{0.0, 0.5}, {1.0}}), std::invalid_argument);
}

TEST_CASE("branch-cut sums at the first zero ordinate") {
  const auto report = check_branch_cut_sums(14.134725141734694, 10);
  CHECK(report.passed);
  CHECK(report.max_residual < 1e-9);
  REQUIRE(!report.details.empty());
  CHECK(report.details[0].first == "witness_min");
  CHECK(report.details[0].second > 1e-3);
}

TEST_CASE("branch-cut sums at t* = 0 reduce to the cosine sums") {
  // sin(0 ln n) = 0 termwise, so the identity pins Im(delta eta) = 0 and the
  // witness comes entirely from S_cos
  const auto report = check_branch_cut_sums(0.0, 5);
  CHECK(report.passed);
  CHECK(report.details[0].second > 1e-3);
}

TEST_CASE("branch-cut lattice needs at least two points per side") {
  CHECK_THROWS_AS(check_branch_cut_sums(5.0, 1), std::invalid_argument);
}

TEST_CASE("run_all passes on defaults and is byte-deterministic") {
  const auto first = run_all();
  CHECK(first.all_passed);
  for (const auto& check : first.checks) {
    INFO(check.check_name, ": ", check.max_residual, " vs ", check.threshold, " ", check.note);
    CHECK(check.passed);
  }

  const auto second = run_all();
  CHECK(report_to_json(first) == report_to_json(second));
}

TEST_CASE("run_all with loosened tolerance still passes") {
  VerifyConfig loose;
  loose.eval.tolerance = 1e-2;
  const auto report = run_all(loose);
  for (const auto& check : report.checks) {
    INFO(check.check_name, ": ", check.max_residual, " vs ", check.threshold, " ", check.note);
    CHECK(check.passed);
  }
}

TEST_CASE("a corrupted catalog fails only the census cross-check") {
  const auto dir = fs::temp_directory_path() / "etalab_verify_corrupt";
  fs::create_directories(dir);
  const auto path = dir / "corrupt.jsonl";
  std::ofstream(path) << "garbage\n";

  const auto report = run_all(VerifyConfig{}, path);
  CHECK_FALSE(report.all_passed);
  for (const auto& check : report.checks) {
    if (check.check_name == "zero-census-consistency") {
      CHECK_FALSE(check.passed);
    } else {
      INFO(check.check_name, ": ", check.note);
      CHECK(check.passed);
    }
  }
  fs::remove_all(dir);
}
