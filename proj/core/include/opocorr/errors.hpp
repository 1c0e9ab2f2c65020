#pragma once

#include <stdexcept>
#include <string>

namespace opocorr {

/// Physical or configuration parameters violate an invariant.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text (config files, histogram files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not reach the requested tolerance within budget.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double requested, double achieved)
      : std::runtime_error(what), requested_(requested), achieved_(achieved) {}
  double requested_tolerance() const noexcept { return requested_; }
  double achieved_error() const noexcept { return achieved_; }

 private:
  double requested_;
  double achieved_;
};

/// An inverse-CDF table failed its monotonicity self-check.
class TabulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Histogram lacks enough resolvable comb peaks for an automatic guess.
class TooFewPeaks : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normal matrix singular at the optimum: one or more parameters are
/// unidentifiable from the data (e.g. no floor bins constrain C2).
class SingularNormalMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs are mutually inconsistent (e.g. coupler transmittance exceeds the
/// total round-trip loss).
class InconsistentInputs : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opocorr
