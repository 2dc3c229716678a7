#include "scr/objectives.hpp"

#include <algorithm>
#include <cmath>

#include "scr/errors.hpp"

namespace scr {
namespace {

// x^p by left-to-right multiplication; p is small and the fixed order
// keeps results bit-reproducible.
double ipow(double x, int p) {
  double out = x;
  for (int i = 1; i < p; ++i) out *= x;
  return out;
}

void check_scalar(double t) {
  if (!std::isfinite(t)) {
    throw DomainError("consistency kernel: input must be finite");
  }
}

void check_dims(const Vector& x, const SensingMatrix& phi, const SignVector& y) {
  if (phi.cols() != x.size()) {
    throw ShapeError("objective: phi column count must equal x length");
  }
  if (phi.rows() != y.size()) {
    throw ShapeError("objective: phi row count must equal y length");
  }
}

}  // namespace

void validate(const SoftParams& params) {
  if (!(params.steepness > 0.0) || !std::isfinite(params.steepness)) {
    throw InvalidParameterError("SoftParams: steepness must be finite and > 0");
  }
  if (params.order < 1) {
    throw InvalidParameterError("SoftParams: order must be a positive integer");
  }
}

double soft_sign(double t, double steepness) {
  validate(SoftParams{steepness, 1});
  check_scalar(t);
  return std::tanh(0.5 * steepness * t);
}

double soft_inconsistency(double t, double steepness) {
  validate(SoftParams{steepness, 1});
  check_scalar(t);
  const double at = steepness * t;
  if (at >= 0.0) {
    const double e = std::exp(-at);
    return 2.0 * e / (1.0 + e);
  }
  return 2.0 / (1.0 + std::exp(at));
}

double soft_inconsistency_derivative(double t, double steepness) {
  const double g = soft_inconsistency(t, steepness);
  return -0.5 * steepness * g * (2.0 - g);
}

double one_sided(double t, OneSidedFlavor flavor) {
  check_scalar(t);
  if (t >= 0.0) return 0.0;
  return flavor == OneSidedFlavor::L1 ? -t : t * t;
}

ObjectiveValue scr_objective(const Vector& x, const SensingMatrix& phi,
                             const SignVector& y, const SoftParams& params) {
  validate(params);
  check_dims(x, phi, y);
  const Vector z = phi.entries * x;
  ObjectiveValue out;
  out.per_term.resize(y.size());
  double sum = 0.0;  // accumulated in measurement order
  for (Index i = 0; i < y.size(); ++i) {
    const double g = soft_inconsistency(y[i] * z[i], params.steepness);
    out.per_term[i] = ipow(g, params.order);
    sum += out.per_term[i];
  }
  out.value = sum;
  return out;
}

Vector scr_gradient(const Vector& x, const SensingMatrix& phi,
                    const SignVector& y, const SoftParams& params) {
  validate(params);
  check_dims(x, phi, y);
  const Vector z = phi.entries * x;
  Vector weights(y.size());
  for (Index i = 0; i < y.size(); ++i) {
    const double g = soft_inconsistency(y[i] * z[i], params.steepness);
    weights[i] = y[i] * ipow(g, params.order) * (2.0 - g);
  }
  return (-0.5 * params.steepness * params.order) *
         (phi.entries.transpose() * weights);
}

ObjectiveValue one_sided_objective(const Vector& x, const SensingMatrix& phi,
                                   const SignVector& y, OneSidedFlavor flavor) {
  check_dims(x, phi, y);
  const Vector z = phi.entries * x;
  ObjectiveValue out;
  out.per_term.resize(y.size());
  double sum = 0.0;
  for (Index i = 0; i < y.size(); ++i) {
    out.per_term[i] = one_sided(y[i] * z[i], flavor);
    sum += out.per_term[i];
  }
  out.value = sum;
  return out;
}

Vector biht_descent_direction(const Vector& x, const SensingMatrix& phi,
                              const SignVector& y, OneSidedFlavor flavor) {
  check_dims(x, phi, y);
  const Vector z = phi.entries * x;
  Vector w(y.size());
  if (flavor == OneSidedFlavor::L1) {
    for (Index i = 0; i < y.size(); ++i) {
      w[i] = y[i] - (z[i] < 0.0 ? -1.0 : 1.0);
    }
    return 0.5 * (phi.entries.transpose() * w);
  }
  for (Index i = 0; i < y.size(); ++i) {
    w[i] = y[i] * std::min(y[i] * z[i], 0.0);
  }
  return -(phi.entries.transpose() * w);
}

}  // namespace scr
