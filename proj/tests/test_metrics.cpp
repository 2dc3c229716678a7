#include "scr/metrics.hpp"

#include <cmath>

#include <doctest.h>

#include "scr/errors.hpp"
#include "scr/rng.hpp"

using namespace scr;

namespace {

Vector random_vector(Index n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.next_normal();
  return v;
}

}  // namespace

TEST_CASE("angular error endpoints") {
  Vector u(3);
  u << 1.0, 2.0, -1.0;
  CHECK(angular_error(u, u) == 0.0);
  CHECK(angular_error(u, -u) == doctest::Approx(1.0).epsilon(1e-14));

  Vector a(2), b(2);
  a << 1.0, 0.0;
  b << 0.0, 1.0;
  CHECK(angular_error(a, b) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("angular error normalizes and clamps internally") {
  for (int trial = 0; trial < 50; ++trial) {
    const Vector u = random_vector(16, 100 + trial);
    // The cosine of parallel vectors rounds to within an ulp of 1; the
    // clamp keeps acos defined and the result within acos(1 - 4 ulp).
    CHECK(angular_error(u, 3.7 * u) <= 1e-7);
    const Vector v = random_vector(16, 200 + trial);
    CHECK(angular_error(u, v) == doctest::Approx(angular_error(v, u)));
    CHECK(angular_error(0.1 * u, v) == doctest::Approx(angular_error(u, v)));
  }
}

TEST_CASE("angular error rejects degenerate input") {
  Vector u(2), zero(2);
  u << 1.0, 1.0;
  zero.setZero();
  CHECK_THROWS_AS(angular_error(u, zero), DegenerateMetricError);
  CHECK_THROWS_AS(angular_error(zero, u), DegenerateMetricError);
  Vector longer(3);
  longer.setOnes();
  CHECK_THROWS_AS(angular_error(u, longer), ShapeError);
}

TEST_CASE("hamming error counts sign disagreements") {
  const auto phi = gen_sensing_matrix(4, 3, 1);
  const Vector x = random_vector(3, 2);
  const auto y = SignVector::sign_of(phi.entries * x);
  CHECK(hamming_error(x, phi, y) == 0.0);

  const auto y_flipped = SignVector::sign_of(-(phi.entries * x));
  CHECK(hamming_error(x, phi, y_flipped) == 1.0);

  Vector bits = y.bits();
  bits[2] = -bits[2];
  CHECK(hamming_error(x, phi, SignVector(bits)) == 0.25);

  CHECK(hamming_error(5.0 * x, phi, y) == 0.0);  // scale invariance
}

TEST_CASE("hamming error applies sign(0) = +1 to re-measurements") {
  SensingMatrix phi;
  phi.entries = Matrix::Zero(2, 2);
  Vector x(2);
  x << 1.0, 1.0;
  Vector bits(2);
  bits << 1.0, -1.0;
  // Zero rows re-measure to +1, so only the second bit disagrees.
  CHECK(hamming_error(x, phi, SignVector(bits)) == 0.5);
}

TEST_CASE("hamming error validates shapes") {
  const auto phi = gen_sensing_matrix(4, 3, 1);
  Vector wrong(2);
  wrong.setOnes();
  const auto y = SignVector::sign_of(Vector::Ones(4));
  CHECK_THROWS_AS(hamming_error(wrong, phi, y), ShapeError);
  const auto y_short = SignVector::sign_of(Vector::Ones(3));
  Vector ok(3);
  ok.setOnes();
  CHECK_THROWS_AS(hamming_error(ok, phi, y_short), ShapeError);
}

TEST_CASE("support metrics cover the matching cases") {
  SparseSignal truth;
  truth.values = Vector::Zero(8);
  truth.values[1] = 1.0;
  truth.values[4] = -2.0;
  truth.support = {1, 4};

  Vector same = truth.values;
  CHECK(support_metrics(same, truth) == std::pair<double, double>{1.0, 1.0});

  Vector disjoint = Vector::Zero(8);
  disjoint[0] = 1.0;
  disjoint[7] = 1.0;
  CHECK(support_metrics(disjoint, truth) == std::pair<double, double>{0.0, 0.0});

  Vector superset = truth.values;
  superset[0] = 0.5;
  superset[7] = -0.5;
  const auto [precision, recall] = support_metrics(superset, truth);
  CHECK(precision == 0.5);
  CHECK(recall == 1.0);

  Vector wrong(9);
  wrong.setZero();
  CHECK_THROWS_AS(support_metrics(wrong, truth), ShapeError);
}
