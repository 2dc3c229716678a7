#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace scr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad scalar or config argument (k out of range, negative variance, ...).
struct InvalidParameterError : Error {
  using Error::Error;
};

// Operand dimensions do not match.
struct ShapeError : Error {
  using Error::Error;
};

// Non-finite scalar where a finite value is required.
struct DomainError : Error {
  using Error::Error;
};

// Phi^T y is the zero vector: no usable starting direction.
struct DegenerateInitError : Error {
  using Error::Error;
};

// Thresholding zeroed every coordinate mid-iteration. Carries the last
// unit-norm iterate so callers can salvage the run.
class DegenerateIterateError : public Error {
 public:
  DegenerateIterateError(const std::string& msg, Eigen::VectorXd last_estimate,
                         int iterations_completed)
      : Error(msg),
        last_estimate_(std::move(last_estimate)),
        iterations_completed_(iterations_completed) {}

  const Eigen::VectorXd& last_estimate() const noexcept { return last_estimate_; }
  int iterations_completed() const noexcept { return iterations_completed_; }

 private:
  Eigen::VectorXd last_estimate_;
  int iterations_completed_;
};

// Zero-norm vector fed to a direction metric.
struct DegenerateMetricError : Error {
  using Error::Error;
};

// Ranking asked for algorithms the sweep does not contain.
struct IncompleteSweepError : Error {
  using Error::Error;
};

}  // namespace scr
