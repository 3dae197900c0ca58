#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace etalab {

template <class Value>
struct AccelResult {
  Value value{};
  int terms_used = 0;
  double error_estimate = std::numeric_limits<double>::infinity();
  bool converged = false;
};

struct AccelOptions {
  double tolerance = 1e-10;
  int max_terms = 1'000'000;
  int min_terms = 16;  ///< do not trust the stopping rule before this many terms
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

/// Shared stopping rule: the estimate is the larger of the last two
/// corrections, floored at a few ulps of the value so that tolerances below
/// double precision are reported as unreachable instead of silently claimed.
template <class Value>
class StoppingRule {
 public:
  explicit StoppingRule(const AccelOptions& opt) : opt_(opt) {}

  bool update(const Value& top, int terms) {
    const double ulp_floor = 4.0 * std::numeric_limits<double>::epsilon() * magnitude(top);
    if (have_last_) {
      const double diff = magnitude(top - last_);
      estimate_ = std::max({diff, prev_diff_, ulp_floor});
      prev_diff_ = diff;
      if (terms >= opt_.min_terms && estimate_ < opt_.tolerance / 2.0) {
        last_ = top;
        return true;
      }
    }
    last_ = top;
    have_last_ = true;
    return false;
  }

  double estimate() const { return estimate_; }

 private:
  AccelOptions opt_;
  Value last_{};
  bool have_last_ = false;
  double prev_diff_ = std::numeric_limits<double>::infinity();
  double estimate_ = std::numeric_limits<double>::infinity();
};

}  // namespace detail

/// Iterated Aitken delta-squared acceleration of the partial sums of
/// term(1) + term(2) + ...  Each new partial sum is pushed through a cascade
/// of acceleration levels; the deepest level is the working value.
template <class Value, class TermFn>
AccelResult<Value> aitken_sum(TermFn&& term, const AccelOptions& opt) {
  // lv[k] holds the last (up to 3) entries of acceleration level k
  std::vector<std::array<Value, 3>> window;
  std::vector<int> count;
  detail::StoppingRule<Value> stop(opt);

  Value partial{};
  AccelResult<Value> res;
  for (int n = 1; n <= opt.max_terms; ++n) {
    partial += term(n);
    Value val = partial;
    for (std::size_t k = 0;; ++k) {
      if (k == window.size()) {
        window.emplace_back();
        count.push_back(0);
      }
      auto& w = window[k];
      if (count[k] < 3) {
        w[count[k]++] = val;
      } else {
        w[0] = w[1];
        w[1] = w[2];
        w[2] = val;
      }
      if (count[k] < 3) break;
      const Value d2 = w[2] - 2.0 * w[1] + w[0];
      const double scale =
          detail::magnitude(w[0]) + detail::magnitude(w[1]) + detail::magnitude(w[2]);
      if (detail::magnitude(d2) <= 1e-30 * (scale + 1e-300)) break;
      const Value d1 = w[2] - w[1];
      val = w[2] - d1 * d1 / d2;
    }
    res.value = val;
    res.terms_used = n;
    if (stop.update(val, n)) {
      res.error_estimate = stop.estimate();
      res.converged = true;
      return res;
    }
  }
  res.error_estimate = stop.estimate();
  return res;
}

/// Euler summation by repeated averaging of the partial sums. Converges to
/// the Abel limit of a bounded oscillating series, which for the alternating
/// Dirichlet series is the analytic continuation onto the sigma = 0 boundary.
///
/// The averaging triangle is carried as its rising diagonal, so each new
/// term costs O(n). To keep the failure path cheap the triangle is capped at
/// a few thousand terms regardless of max_terms.
template <class Value, class TermFn>
AccelResult<Value> euler_sum(TermFn&& term, const AccelOptions& opt) {
  constexpr int kTriangleCap = 5000;
  const int max_terms = std::min(opt.max_terms, kTriangleCap);

  std::vector<Value> diag;  // diag[j] = level-j average ending at the newest sum
  detail::StoppingRule<Value> stop(opt);

  Value partial{};
  AccelResult<Value> res;
  for (int n = 1; n <= max_terms; ++n) {
    partial += term(n);
    Value cur = partial;
    for (auto& d : diag) {
      const Value old = d;
      d = cur;
      cur = 0.5 * (old + cur);
    }
    diag.push_back(cur);
    res.value = cur;
    res.terms_used = n;
    if (stop.update(cur, n)) {
      res.error_estimate = stop.estimate();
      res.converged = true;
      return res;
    }
  }
  res.error_estimate = stop.estimate();
  return res;
}

}  // namespace etalab
