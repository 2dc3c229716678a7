#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace scr {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// K-sparse ground truth: `values` is exactly zero off `support`, and
// `support` lists the distinct nonzero positions in ascending order.
struct SparseSignal {
  Vector values;
  std::vector<Index> support;

  Index size() const noexcept { return values.size(); }
  Index nonzeros() const noexcept { return static_cast<Index>(support.size()); }
};

// Dense M x N measurement operator.
struct SensingMatrix {
  Matrix entries;

  Index rows() const noexcept { return entries.rows(); }
  Index cols() const noexcept { return entries.cols(); }
};

// Length-M vector of exact +/-1 entries, stored as doubles so it plugs
// straight into matrix arithmetic.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(Vector bits);

  // sign(0) maps to +1, keeping the codomain {-1, +1}.
  static SignVector sign_of(const Vector& v);

  const Vector& bits() const noexcept { return bits_; }
  Index size() const noexcept { return bits_.size(); }
  double operator[](Index i) const { return bits_[i]; }

 private:
  Vector bits_;
};

// Additive white Gaussian noise level, expressed as a variance.
struct NoiseSpec {
  double variance = 0.0;
};

// Exactly k nonzeros, i.i.d. standard normal, on a support drawn uniformly
// without replacement. Deterministic in (n, k, seed).
SparseSignal gen_sparse_signal(Index n, Index k, std::uint64_t seed);

// M x N matrix of i.i.d. standard-normal entries, filled in row-major
// order from the seeded stream. Deterministic in (m, n, seed).
SensingMatrix gen_sensing_matrix(Index m, Index n, std::uint64_t seed);

// y = sign(phi * x + noise). A zero-variance spec draws no noise at all,
// so the result is a pure function of (phi, x).
SignVector measure(const SensingMatrix& phi, const Vector& x,
                   const NoiseSpec& noise, std::uint64_t seed);
SignVector measure(const SensingMatrix& phi, const SparseSignal& x,
                   const NoiseSpec& noise, std::uint64_t seed);

}  // namespace scr
