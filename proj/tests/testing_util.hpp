#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "scr/signal_model.hpp"

namespace scr::test {

// Central finite differences, one objective evaluation pair per
// coordinate. Step scales with the coordinate so large entries do not
// starve the difference of significant digits.
inline Vector finite_difference_gradient(
    const std::function<double(const Vector&)>& f, const Vector& x,
    double base_step = 1e-5) {
  Vector grad(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    const double h = base_step * std::max(1.0, std::abs(x[i]));
    Vector lo = x;
    Vector hi = x;
    lo[i] -= h;
    hi[i] += h;
    grad[i] = (f(hi) - f(lo)) / (2.0 * h);
  }
  return grad;
}

inline double finite_difference_scalar(const std::function<double(double)>& f,
                                       double t, double base_step = 1e-6) {
  const double h = base_step * std::max(1.0, std::abs(t));
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Standard normal tail probability P(Z > z) by composite Simpson
// quadrature on [z, z + 12]; the remainder beyond 12 sigma is far below
// the tolerances used in the tests. Independent of everything in scr.
inline double gauss_tail_quadrature(double z) {
  const double lo = z;
  const double hi = z + 12.0;
  const int intervals = 20000;  // even
  const double step = (hi - lo) / intervals;
  const auto density = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
  };
  double sum = density(lo) + density(hi);
  for (int i = 1; i < intervals; ++i) {
    sum += density(lo + i * step) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * step / 3.0;
}

inline double relative_gap(const Vector& a, const Vector& b) {
  const double scale = std::max({a.norm(), b.norm(), 1e-300});
  return (a - b).norm() / scale;
}

}  // namespace scr::test
