#include "scr/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "scr/errors.hpp"
#include "scr/rng.hpp"

namespace scr {

SignVector::SignVector(Vector bits) : bits_(std::move(bits)) {
  for (Index i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 1.0 && bits_[i] != -1.0) {
      throw InvalidParameterError("SignVector: entries must be exactly +1 or -1");
    }
  }
}

SignVector SignVector::sign_of(const Vector& v) {
  SignVector out;
  out.bits_.resize(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw DomainError("sign_of: input must be finite");
    }
    out.bits_[i] = v[i] < 0.0 ? -1.0 : 1.0;
  }
  return out;
}

SparseSignal gen_sparse_signal(Index n, Index k, std::uint64_t seed) {
  if (n < 1) {
    throw InvalidParameterError("gen_sparse_signal: n must be >= 1");
  }
  if (k < 1 || k > n) {
    throw InvalidParameterError("gen_sparse_signal: need 1 <= k <= n");
  }
  SplitMix64 rng(seed);

  // Partial Fisher-Yates: after k swaps the first k slots are a uniform
  // sample without replacement.
  std::vector<Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Index{0});
  for (Index i = 0; i < k; ++i) {
    const Index j =
        i + static_cast<Index>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }

  SparseSignal out;
  out.support.assign(idx.begin(), idx.begin() + k);
  std::sort(out.support.begin(), out.support.end());
  out.values = Vector::Zero(n);
  for (const Index pos : out.support) {
    double v = rng.next_normal();
    while (v == 0.0) v = rng.next_normal();  // keep the nonzero count exact
    out.values[pos] = v;
  }
  return out;
}

SensingMatrix gen_sensing_matrix(Index m, Index n, std::uint64_t seed) {
  if (m < 1 || n < 1) {
    throw InvalidParameterError("gen_sensing_matrix: dimensions must be >= 1");
  }
  SplitMix64 rng(seed);
  SensingMatrix out;
  out.entries.resize(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      out.entries(i, j) = rng.next_normal();
    }
  }
  return out;
}

SignVector measure(const SensingMatrix& phi, const Vector& x,
                   const NoiseSpec& noise, std::uint64_t seed) {
  if (phi.cols() != x.size()) {
    throw ShapeError("measure: phi column count must equal signal length");
  }
  if (!(noise.variance >= 0.0)) {
    throw InvalidParameterError("measure: noise variance must be >= 0");
  }
  Vector z = phi.entries * x;
  if (noise.variance > 0.0) {
    SplitMix64 rng(seed);
    const double sigma = std::sqrt(noise.variance);
    for (Index i = 0; i < z.size(); ++i) {
      z[i] += sigma * rng.next_normal();
    }
  }
  return SignVector::sign_of(z);
}

SignVector measure(const SensingMatrix& phi, const SparseSignal& x,
                   const NoiseSpec& noise, std::uint64_t seed) {
  return measure(phi, x.values, noise, seed);
}

}  // namespace scr
