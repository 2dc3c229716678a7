#pragma once

#include "scr/signal_model.hpp"

namespace scr {

// Knobs of the soft consistency kernel: steepness a > 0 of the sigmoid and
// integer order p >= 1 of the per-measurement penalty.
struct SoftParams {
  double steepness = 1.0;
  int order = 1;
};

void validate(const SoftParams& params);

enum class OneSidedFlavor { L1, L2 };

struct ObjectiveValue {
  double value = 0.0;
  Vector per_term;  // length M, non-negative, sums to value
};

// F_a(t) = (e^{at} - 1)/(e^{at} + 1), evaluated as tanh(a t / 2) so large
// |a t| saturates to +/-1 instead of overflowing.
double soft_sign(double t, double steepness);

// G_a(t) = 1 - F_a(t), evaluated through exp(-|a t|) so it stays strictly
// positive far into the right tail instead of rounding to zero where
// 1 - tanh would; the left tail saturates to exactly 2 once a*t < -36.
double soft_inconsistency(double t, double steepness);

// dG_a/dt = -(a/2) G_a(t) (2 - G_a(t)).
double soft_inconsistency_derivative(double t, double steepness);

// 0 on the consistent half-line t >= 0; -t (L1) or t^2 (L2) otherwise.
double one_sided(double t, OneSidedFlavor flavor);

// sum_i G_a(y_i phi_i x)^p, with the per-measurement terms exposed.
ObjectiveValue scr_objective(const Vector& x, const SensingMatrix& phi,
                             const SignVector& y, const SoftParams& params);

// Analytic gradient of scr_objective:
//   -(1/2) a p Phi^T [ y .* g^p .* (2 - g) ],   g_i = G_a(y_i phi_i x).
Vector scr_gradient(const Vector& x, const SensingMatrix& phi,
                    const SignVector& y, const SoftParams& params);

// sum_i one_sided(y_i phi_i x), the BIHT consistency objective.
ObjectiveValue one_sided_objective(const Vector& x, const SensingMatrix& phi,
                                   const SignVector& y, OneSidedFlavor flavor);

// Direction to move ALONG (added to x) when descending the one-sided
// objective:
//   L1: (1/2) Phi^T (y - sign(Phi x)), the negative subgradient;
//   L2: -Phi^T [ y .* min(y .* Phi x, 0) ], the negative gradient with the
//       conventional factor 2 folded into the step size.
Vector biht_descent_direction(const Vector& x, const SensingMatrix& phi,
                              const SignVector& y, OneSidedFlavor flavor);

}  // namespace scr
