#include <cmath>
#include <complex>

#include <doctest.h>

#include "etalab/acceleration.hpp"

using etalab::AccelOptions;
using etalab::aitken_sum;
using etalab::euler_sum;

namespace {

// alternating harmonic series, sums to ln 2
double alt_harmonic_term(int n) { return (n % 2 == 0 ? -1.0 : 1.0) / n; }

}  // namespace

TEST_CASE("aitken accelerates the alternating harmonic series") {
  AccelOptions opt{1e-12, 100000, 8};
  const auto res = aitken_sum<double>(alt_harmonic_term, opt);
  REQUIRE(res.converged);
  CHECK(std::abs(res.value - std::log(2.0)) < 1e-12);
  // the raw series needs ~1e12 terms for this accuracy
  CHECK(res.terms_used < 60);
}

TEST_CASE("aitken handles a geometric series exactly") {
  AccelOptions opt{1e-14, 1000, 4};
  const auto res = aitken_sum<double>([](int n) { return std::pow(-0.5, n - 1); }, opt);
  REQUIRE(res.converged);
  CHECK(std::abs(res.value - 2.0 / 3.0) < 1e-14);
}

TEST_CASE("aitken reports non-convergence when capped") {
  AccelOptions opt{1e-12, 6, 8};  // min_terms above max_terms
  const auto res = aitken_sum<double>(alt_harmonic_term, opt);
  CHECK_FALSE(res.converged);
  CHECK(res.terms_used == 6);
}

TEST_CASE("euler sums the divergent sign series to its Abel limit") {
  AccelOptions opt{1e-12, 1000, 4};
  const auto res = euler_sum<double>([](int n) { return n % 2 == 0 ? -1.0 : 1.0; }, opt);
  REQUIRE(res.converged);
  CHECK(std::abs(res.value - 0.5) < 1e-12);
  CHECK(res.terms_used < 20);
}

TEST_CASE("euler matches aitken on a convergent alternating series") {
  AccelOptions opt{1e-12, 10000, 8};
  const auto a = aitken_sum<double>(alt_harmonic_term, opt);
  const auto e = euler_sum<double>(alt_harmonic_term, opt);
  REQUIRE(a.converged);
  REQUIRE(e.converged);
  CHECK(std::abs(a.value - e.value) <= a.error_estimate + e.error_estimate);
}

TEST_CASE("error estimate floors at a few ulps, so impossible tolerances fail") {
  AccelOptions opt{1e-25, 2000, 8};
  const auto res = aitken_sum<double>(alt_harmonic_term, opt);
  CHECK_FALSE(res.converged);
  CHECK(std::abs(res.value - std::log(2.0)) < 1e-13);  // best value still delivered
}

TEST_CASE("complex series accelerate too") {
  const std::complex<double> z{0.3, 0.4};
  AccelOptions opt{1e-13, 1000, 4};
  // geometric with complex ratio, sums to 1/(1-z) starting from n=1 term z^0
  const auto res = aitken_sum<std::complex<double>>(
      [z](int n) { return std::pow(z, n - 1); }, opt);
  REQUIRE(res.converged);
  CHECK(std::abs(res.value - 1.0 / (1.0 - z)) < 1e-12);
}
