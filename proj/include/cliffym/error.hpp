#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cliffym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("multivector signatures differ") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised by truncated series that fail to reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_term_norm)
      : Error(what + " (last term norm " + std::to_string(last_term_norm) + ")"),
        last_term_norm_(last_term_norm) {}
  double last_term_norm() const { return last_term_norm_; }

 private:
  double last_term_norm_;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

// A pointwise invariant failed at a sample point.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<double> point, double violation)
      : Error(what + " at " + format_point(point) + " (violation " + std::to_string(violation) + ")"),
        point_(std::move(point)),
        violation_(violation) {}
  const std::vector<double>& point() const { return point_; }
  double violation() const { return violation_; }

 private:
  static std::string format_point(const std::vector<double>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(x[i]);
    }
    return s + ")";
  }
  std::vector<double> point_;
  double violation_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffym
