#include "scr/rng.hpp"

#include <cmath>
#include <set>
#include <vector>

#include <doctest.h>

#include "scr/errors.hpp"

using scr::SplitMix64;

TEST_CASE("SplitMix64 matches the reference output stream") {
  // Reference values from the canonical splitmix64 implementation.
  SplitMix64 rng0(0);
  CHECK(rng0.next_u64() == 0xE220A8397B1DCDAFULL);
  CHECK(rng0.next_u64() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng0.next_u64() == 0x06C45D188009454FULL);

  SplitMix64 rng1(1);
  CHECK(rng1.next_u64() == 0x910A2DEC89025CC1ULL);
  CHECK(rng1.next_u64() == 0xBEEB8DA1658EEC67ULL);
  CHECK(rng1.next_u64() == 0xF893A2EEFB32555EULL);
}

TEST_CASE("uniform draws are in (0,1) and bit-stable") {
  SplitMix64 rng(42);
  CHECK(rng.next_uniform01() == doctest::Approx(0.7415648787718233).epsilon(1e-15));
  CHECK(rng.next_uniform01() == doctest::Approx(0.15991039287692022).epsilon(1e-15));

  SplitMix64 sampler(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = sampler.next_uniform01();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("normal draws reproduce the seeded Box-Muller pair") {
  SplitMix64 rng(42);
  CHECK(rng.next_normal() == doctest::Approx(0.41471975043153014).epsilon(1e-12));
  CHECK(rng.next_normal() == doctest::Approx(0.6526812221519431).epsilon(1e-12));
}

TEST_CASE("normal draws have unit variance and zero mean") {
  SplitMix64 rng(123);
  const int n = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_normal();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("next_below is unbiased enough and rejects bound 0") {
  SplitMix64 rng(9);
  CHECK(rng.next_below(1) == 0);
  CHECK_THROWS_AS(rng.next_below(0), scr::InvalidParameterError);

  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 30000; ++i) ++counts[rng.next_below(3)];
  for (const int c : counts) {
    CHECK(c > 9500);
    CHECK(c < 10500);
  }
}

TEST_CASE("derive_seed separates streams and is order sensitive") {
  const std::uint64_t base = 77;
  CHECK(scr::derive_seed(base, {1, 2}) == scr::derive_seed(base, {1, 2}));
  CHECK(scr::derive_seed(base, {1, 2}) != scr::derive_seed(base, {2, 1}));
  CHECK(scr::derive_seed(base, {1}) != scr::derive_seed(base + 1, {1}));

  std::set<std::uint64_t> seen;
  for (std::uint64_t w = 0; w < 1000; ++w) {
    seen.insert(scr::derive_seed(base, {w}));
  }
  CHECK(seen.size() == 1000);
}

TEST_CASE("seed_word keys distinct doubles to distinct words") {
  CHECK(scr::seed_word(0.5) != scr::seed_word(std::nextafter(0.5, 1.0)));
  CHECK(scr::seed_word(1.25) == scr::seed_word(1.25));
}
