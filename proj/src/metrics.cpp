#include "scr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scr/errors.hpp"

namespace scr {

double angular_error(const Vector& estimate, const Vector& truth) {
  if (estimate.size() != truth.size()) {
    throw ShapeError("angular_error: vectors must have equal length");
  }
  const double norm_e = estimate.norm();
  const double norm_t = truth.norm();
  if (norm_e == 0.0 || norm_t == 0.0) {
    throw DegenerateMetricError("angular_error: zero-norm input");
  }
  const double cosine =
      std::clamp(estimate.dot(truth) / (norm_e * norm_t), -1.0, 1.0);
  return std::acos(cosine) / std::numbers::pi;
}

double hamming_error(const Vector& estimate, const SensingMatrix& phi,
                     const SignVector& y) {
  if (phi.cols() != estimate.size()) {
    throw ShapeError("hamming_error: phi column count must equal estimate length");
  }
  if (phi.rows() != y.size()) {
    throw ShapeError("hamming_error: phi row count must equal y length");
  }
  const SignVector resigned = SignVector::sign_of(phi.entries * estimate);
  Index mismatches = 0;
  for (Index i = 0; i < y.size(); ++i) {
    if (resigned[i] != y[i]) ++mismatches;
  }
  return static_cast<double>(mismatches) / static_cast<double>(y.size());
}

std::pair<double, double> support_metrics(const Vector& estimate,
                                          const SparseSignal& truth) {
  if (estimate.size() != truth.size()) {
    throw ShapeError("support_metrics: vectors must have equal length");
  }
  Index estimated = 0;
  Index overlap = 0;
  for (Index i = 0; i < estimate.size(); ++i) {
    if (estimate[i] != 0.0) {
      ++estimated;
      if (truth.values[i] != 0.0) ++overlap;
    }
  }
  const Index actual = truth.nonzeros();
  const double precision =
      estimated > 0 ? static_cast<double>(overlap) / static_cast<double>(estimated) : 0.0;
  const double recall =
      actual > 0 ? static_cast<double>(overlap) / static_cast<double>(actual) : 0.0;
  return {precision, recall};
}

TrialMetrics score_estimate(const Vector& estimate, const SparseSignal& truth,
                            const SensingMatrix& phi, const SignVector& y) {
  TrialMetrics metrics;
  metrics.angular_error = angular_error(estimate, truth.values);
  metrics.hamming_error = hamming_error(estimate, phi, y);
  std::tie(metrics.support_precision, metrics.support_recall) =
      support_metrics(estimate, truth);
  return metrics;
}

}  // namespace scr
