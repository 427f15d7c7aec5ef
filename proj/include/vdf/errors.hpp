#pragma once

#include <stdexcept>
#include <string>

namespace vdf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain where a formula is defined (x <= 0, kR underflow).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Zero separation in a Green's function.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Vanishing (possibly Doppler-shifted) detuning.
class PoleError : public Error {
 public:
  using Error::Error;
};

class CausalityError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Quasiresonant window or observation-time window violated in strict mode.
class ValidityError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string &what, double estimate, double error_estimate)
      : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}
  double estimate() const { return estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

}  // namespace vdf
