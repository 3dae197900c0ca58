#pragma once

#include <stdexcept>
#include <string>

#include "etalab/eval.hpp"

namespace etalab {

/// Thrown when an accelerated summation cannot reach the requested tolerance
/// within max_terms. Carries the best value obtained and its error estimate.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(std::string what, EtaEvaluation best_value)
      : std::runtime_error(std::move(what)), best(best_value) {}

  EtaEvaluation best;
};

/// Evaluation requested at a pole or a zero of a required factor.
class SingularPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Contour subdivision hit the depth cap while a phase step stayed >= pi/2;
/// the rectangle boundary runs too close to a zero.
class ContourTooClose : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No valid next boundary exists at the requested step.
class PartitionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input while reading a serialized artifact.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string what, long line) : std::runtime_error(std::move(what)), line_number(line) {}

  long line_number = 0;
};

/// A loaded or constructed value violates a documented invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace etalab
