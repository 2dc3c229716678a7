#pragma once

#include <variant>
#include <vector>

#include "scr/objectives.hpp"
#include "scr/signal_model.hpp"

namespace scr {

enum class Algorithm { Scr, BihtL1, BihtL2 };

// Keep the K largest-magnitude coordinates.
struct HardK {
  Index k = 1;
};

// Shrink every coordinate by tau * lambda each iteration.
struct SoftLambda {
  double lambda = 0.0;
};

using SparsityMode = std::variant<HardK, SoftLambda>;

struct SolverConfig {
  Algorithm algorithm = Algorithm::Scr;
  SoftParams soft{};  // used by Scr only
  SparsityMode sparsity = HardK{16};
  double step_size = 1.0;
  int max_iters = 200;
  double stall_tolerance = 1e-7;
};

struct ReconResult {
  // Final iterate; unit l2 norm and, in HardK mode, at most K nonzeros.
  Vector estimate;
  // Iterate with the lowest objective seen, kept for diagnostics; under
  // heavy noise the loop oscillates and the two can differ.
  Vector best_estimate;
  int iterations_run = 0;
  // [0] is the objective at the normalized init; one entry per iteration
  // follows. SoftLambda mode includes the lambda * ||x||_1 penalty.
  std::vector<double> objective_trace;
  bool converged_by_stall = false;
};

// x0 = Phi^T y / ||Phi^T y||; throws DegenerateInitError when Phi^T y = 0.
Vector init_estimate(const SensingMatrix& phi, const SignVector& y);

// Keeps the k entries of largest absolute value and zeroes the rest; ties
// break toward the lowest index.
Vector top_k(const Vector& v, Index k);

// Element-wise shrinkage toward zero by theta >= 0.
Vector soft_threshold(const Vector& v, double theta);

// 2/M for every algorithm: the descent directions sum M per-measurement
// terms, so the step must scale like 1/M to stay an average correction.
double default_step_size(Algorithm algorithm, Index m);

// Projected descent shared by all three algorithms: step along the
// algorithm's direction, sparsify (top-K or shrinkage), renormalize.
// Stops early once an iterate moves less than stall_tolerance. Throws
// DegenerateIterateError (carrying the previous iterate) if sparsification
// wipes out every coordinate.
ReconResult reconstruct(const SignVector& y, const SensingMatrix& phi,
                        const SolverConfig& config);

}  // namespace scr
