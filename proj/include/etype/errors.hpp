#pragma once

#include <stdexcept>
#include <string>

namespace etype {

// Base for every error raised by the toolkit. Callers that only need to
// distinguish "our" failures from std failures catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateMetricError : public Error {
 public:
  using Error::Error;
};

class UnsupportedChartError : public Error {
 public:
  using Error::Error;
};

class InvalidParametersError : public Error {
 public:
  using Error::Error;
};

// Raised by reduce() when beta == 0; such structures are handled by
// triviality_check_beta_zero instead.
class BetaZeroError : public Error {
 public:
  using Error::Error;
};

class NoModelError : public Error {
 public:
  using Error::Error;
};

class InsufficientSmoothnessError : public Error {
 public:
  using Error::Error;
};

class IntervalMismatchError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnknownNameError : public Error {
 public:
  using Error::Error;
};

class StiffnessError : public Error {
 public:
  StiffnessError(const std::string& what, double last_good_r)
      : Error(what), last_good_r_(last_good_r) {}
  double last_good_r() const noexcept { return last_good_r_; }

 private:
  double last_good_r_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace etype
