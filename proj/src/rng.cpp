#include "scr/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "scr/errors.hpp"

namespace scr {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next_u64() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::next_uniform01() noexcept {
  const std::uint64_t bits = (next_u64() >> 11) | 1ULL;
  return static_cast<double>(bits) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) {
    throw InvalidParameterError("next_below: bound must be >= 1");
  }
  // Accept only draws from the largest prefix that is a multiple of bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double SplitMix64::next_normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform01();
  const double u2 = next_uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = mix64(base + kGolden);
  for (const std::uint64_t w : words) {
    h = mix64(h + kGolden + mix64(w + kGolden));
  }
  return h;
}

std::uint64_t seed_word(double value) noexcept {
  return std::bit_cast<std::uint64_t>(value);
}

}  // namespace scr
