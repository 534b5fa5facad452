#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fracgrad {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical scheme could not reach its target accuracy.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration; `field` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// An iterative solver exhausted its iteration budget.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conjugate gradients met a direction of non-positive curvature.
class SpdViolationError : public std::runtime_error {
 public:
  SpdViolationError(const std::string& what, std::vector<double> direction,
                    double curvature)
      : std::runtime_error(what),
        direction_(std::move(direction)),
        curvature_(curvature) {}
  const std::vector<double>& direction() const noexcept { return direction_; }
  double curvature() const noexcept { return curvature_; }

 private:
  std::vector<double> direction_;
  double curvature_;
};

}  // namespace fracgrad
