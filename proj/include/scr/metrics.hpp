#pragma once

#include <utility>

#include "scr/signal_model.hpp"

namespace scr {

struct TrialMetrics {
  double angular_error = 0.0;
  double hamming_error = 0.0;
  double support_precision = 0.0;
  double support_recall = 0.0;
};

// (1/pi) acos of the inner product of the unit-normalized arguments; both
// inputs are normalized here, so an unnormalized ground truth is fine.
// The inner product is clamped to [-1, 1] before acos.
double angular_error(const Vector& estimate, const Vector& truth);

// Fraction of measurements where sign(phi * estimate) != y, with
// sign(0) = +1.
double hamming_error(const Vector& estimate, const SensingMatrix& phi,
                     const SignVector& y);

// Precision/recall of the estimate's nonzero set against the truth's.
// An empty denominator yields 0.
std::pair<double, double> support_metrics(const Vector& estimate,
                                          const SparseSignal& truth);

// All four per-trial quality numbers for one estimate.
TrialMetrics score_estimate(const Vector& estimate, const SparseSignal& truth,
                            const SensingMatrix& phi, const SignVector& y);

}  // namespace scr
