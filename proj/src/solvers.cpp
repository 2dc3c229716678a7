#include "scr/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "scr/errors.hpp"

namespace scr {
namespace {

void validate_config(const SolverConfig& config, Index n) {
  if (!(config.step_size > 0.0) || !std::isfinite(config.step_size)) {
    throw InvalidParameterError("SolverConfig: step_size must be finite and > 0");
  }
  if (config.max_iters < 1) {
    throw InvalidParameterError("SolverConfig: max_iters must be >= 1");
  }
  if (!(config.stall_tolerance >= 0.0)) {
    throw InvalidParameterError("SolverConfig: stall_tolerance must be >= 0");
  }
  if (config.algorithm == Algorithm::Scr) {
    validate(config.soft);
  }
  if (const auto* hard = std::get_if<HardK>(&config.sparsity)) {
    if (hard->k < 1 || hard->k > n) {
      throw InvalidParameterError("SolverConfig: HardK k must satisfy 1 <= k <= N");
    }
  } else {
    const auto& soft = std::get<SoftLambda>(config.sparsity);
    if (!(soft.lambda >= 0.0) || !std::isfinite(soft.lambda)) {
      throw InvalidParameterError("SolverConfig: lambda must be finite and >= 0");
    }
  }
}

double objective_at(const Vector& x, const SensingMatrix& phi,
                    const SignVector& y, const SolverConfig& config) {
  double value = 0.0;
  switch (config.algorithm) {
    case Algorithm::Scr:
      value = scr_objective(x, phi, y, config.soft).value;
      break;
    case Algorithm::BihtL1:
      value = one_sided_objective(x, phi, y, OneSidedFlavor::L1).value;
      break;
    case Algorithm::BihtL2:
      value = one_sided_objective(x, phi, y, OneSidedFlavor::L2).value;
      break;
  }
  if (const auto* soft = std::get_if<SoftLambda>(&config.sparsity)) {
    value += soft->lambda * x.lpNorm<1>();
  }
  return value;
}

}  // namespace

Vector init_estimate(const SensingMatrix& phi, const SignVector& y) {
  if (phi.rows() != y.size()) {
    throw ShapeError("init_estimate: phi row count must equal y length");
  }
  Vector v = phi.entries.transpose() * y.bits();
  const double norm = v.norm();
  if (norm == 0.0) {
    throw DegenerateInitError("init_estimate: Phi^T y is the zero vector");
  }
  return v / norm;
}

Vector top_k(const Vector& v, Index k) {
  if (k < 1 || k > v.size()) {
    throw InvalidParameterError("top_k: need 1 <= k <= length(v)");
  }
  if (k == v.size()) return v;
  std::vector<Index> order(static_cast<std::size_t>(v.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&v](Index a, Index b) {
    const double ma = std::abs(v[a]);
    const double mb = std::abs(v[b]);
    if (ma != mb) return ma > mb;
    return a < b;  // ties: lowest index wins
  });
  Vector out = Vector::Zero(v.size());
  for (Index i = 0; i < k; ++i) {
    out[order[static_cast<std::size_t>(i)]] = v[order[static_cast<std::size_t>(i)]];
  }
  return out;
}

Vector soft_threshold(const Vector& v, double theta) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw InvalidParameterError("soft_threshold: theta must be finite and >= 0");
  }
  Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]) - theta;
    out[i] = mag > 0.0 ? (v[i] < 0.0 ? -mag : mag) : 0.0;
  }
  return out;
}

double default_step_size(Algorithm /*algorithm*/, Index m) {
  // The directions sum M per-measurement terms; 2/M keeps the step at the
  // scale of the unit-norm iterate and is the largest multiple of 1/M at
  // which every algorithm still reaches consistent points noiselessly.
  return 2.0 / static_cast<double>(m);
}

ReconResult reconstruct(const SignVector& y, const SensingMatrix& phi,
                        const SolverConfig& config) {
  validate_config(config, phi.cols());
  if (phi.rows() != y.size()) {
    throw ShapeError("reconstruct: phi row count must equal y length");
  }

  Vector current = init_estimate(phi, y);

  ReconResult result;
  result.objective_trace.reserve(static_cast<std::size_t>(config.max_iters) + 1);
  result.objective_trace.push_back(objective_at(current, phi, y, config));

  // Only sparsified iterates are candidates for best_estimate; the init is
  // dense and would violate the HardK contract.
  double best_value = std::numeric_limits<double>::infinity();
  Vector best;

  for (int iter = 1; iter <= config.max_iters; ++iter) {
    Vector b;
    switch (config.algorithm) {
      case Algorithm::Scr:
        b = current - config.step_size * scr_gradient(current, phi, y, config.soft);
        break;
      case Algorithm::BihtL1:
        b = current + config.step_size *
                          biht_descent_direction(current, phi, y, OneSidedFlavor::L1);
        break;
      case Algorithm::BihtL2:
        b = current + config.step_size *
                          biht_descent_direction(current, phi, y, OneSidedFlavor::L2);
        break;
    }

    Vector u;
    if (const auto* hard = std::get_if<HardK>(&config.sparsity)) {
      u = top_k(b, hard->k);
    } else {
      u = soft_threshold(b, config.step_size * std::get<SoftLambda>(config.sparsity).lambda);
    }

    const double norm = u.norm();
    if (norm == 0.0) {
      throw DegenerateIterateError(
          "reconstruct: sparsification produced the zero vector", current, iter - 1);
    }
    Vector next = u / norm;

    const double value = objective_at(next, phi, y, config);
    result.objective_trace.push_back(value);
    if (value < best_value) {
      best_value = value;
      best = next;
    }
    result.iterations_run = iter;

    const double moved = (next - current).norm();
    current = std::move(next);
    if (moved <= config.stall_tolerance) {
      result.converged_by_stall = true;
      break;
    }
  }

  result.estimate = std::move(current);
  result.best_estimate = std::move(best);
  return result;
}

}  // namespace scr
