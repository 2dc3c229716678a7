#pragma once

#include <cstdint>
#include <string>

#include "scr/signal_model.hpp"

namespace scr {

// One complete synthetic problem: the ground truth, the operator, and the
// quantized measurements, plus everything needed to regenerate them.
struct ProblemInstance {
  Index n = 0;
  Index k = 0;
  Index m = 0;
  double sigma2 = 0.0;
  std::uint64_t seed = 0;
  SparseSignal x;
  SensingMatrix phi;
  SignVector y;
};

// Canonical generator: derives separate sub-streams for the signal, the
// matrix, and the noise from `seed`, so the instance is a pure function of
// (n, k, m, sigma2, seed).
ProblemInstance make_instance(Index n, Index k, Index m, double sigma2,
                              std::uint64_t seed);

// JSON container, one object per file:
//   { "format": "scr-instance", "version": 1,
//     "n", "k", "m", "sigma2", "seed",
//     "phi": [...row-major M*N...], "x": [...N...], "y": [...M...] }
// Doubles are serialized in shortest round-trip form, so a load returns
// bit-identical values.
void save_instance(const ProblemInstance& instance, const std::string& path);
ProblemInstance load_instance(const std::string& path);

}  // namespace scr
