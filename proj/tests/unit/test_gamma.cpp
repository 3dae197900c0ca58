#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "etalab/gamma.hpp"
#include "oracles.hpp"

using etalab::log_gamma;
using namespace etalab::testing;
using Cplx = std::complex<double>;

TEST_CASE("log_gamma at small real arguments") {
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
  CHECK(std::abs(log_gamma({2.0, 0.0})) < 1e-14);
  CHECK(std::abs(log_gamma({0.5, 0.0}).real() - kLogGammaHalf) < 1e-13);
  CHECK(std::abs(log_gamma({5.0, 0.0}).real() - kLogGamma5) < 1e-13);
}

TEST_CASE("log_gamma rejects the poles") {
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), std::domain_error);
}

TEST_CASE("log_gamma matches lgamma along the positive axis") {
  for (double x = 0.1; x <= 100.0; x += 0.7) {
    const double reference = std::lgamma(x);
    const double got = log_gamma({x, 0.0}).real();
    CHECK(std::abs(got - reference) <= 1e-12 * std::max(1.0, std::abs(reference)));
    CHECK(std::abs(log_gamma({x, 0.0}).imag()) < 1e-13);
  }
}

TEST_CASE("log_gamma conjugate symmetry") {
  for (const Cplx z : {Cplx{0.25, 7.0}, Cplx{3.0, 15.0}, Cplx{0.05, 0.3}}) {
    const auto a = log_gamma(z);
    const auto b = log_gamma(std::conj(z));
    CHECK(std::abs(b - std::conj(a)) < 1e-12);
  }
}

TEST_CASE("log_gamma satisfies the recurrence") {
  for (const Cplx z : {Cplx{0.3, 2.0}, Cplx{0.1, 14.0}, Cplx{1.4, -8.0}}) {
    const auto lhs = log_gamma(z + 1.0);
    const auto rhs = log_gamma(z) + std::log(z);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("duplication formula, compared through exp to stay branch-free") {
  using std::numbers::pi;
  for (const Cplx z : {Cplx{0.35, 1.0}, Cplx{1.2, 3.5}}) {
    const Cplx left = std::exp(log_gamma(2.0 * z));
    const Cplx right = std::exp(log_gamma(z) + log_gamma(z + 0.5) +
                                (2.0 * z - 1.0) * std::numbers::ln2 - 0.5 * std::log(pi));
    CHECK(std::abs(left - right) < 1e-12 * std::abs(left));
  }
}

TEST_CASE("log_gamma at reference complex points") {
  // high-precision reference values; the contract is 1e-12 absolute for |z| <= 100
  const Cplx a = log_gamma({0.25, 50.0});
  CHECK(std::abs(a - Cplx{-78.598880432701842504, 145.20865952425722833}) < 1e-12);
  const Cplx b = log_gamma({80.0, 60.0});
  CHECK(std::abs(b - Cplx{248.4205684593052386, 267.46804931095159685}) < 1e-12);
  const Cplx c = log_gamma({0.15, -3.5});
  CHECK(std::abs(c - Cplx{-5.0167013501937351692, -0.32926232004299816712}) < 1e-12);
}
