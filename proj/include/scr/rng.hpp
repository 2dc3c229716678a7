#pragma once

#include <cstdint>
#include <initializer_list>

namespace scr {

// SplitMix64 (Vigna's public-domain reference mixer). One 64-bit word of
// state, and the output stream is a pure function of the seed on every
// platform. The distribution transforms below are spelled out by hand
// because std::normal_distribution and std::uniform_real_distribution are
// implementation-defined and would break cross-platform reproducibility.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept;

  // Uniform on (0,1): the top 53 bits with the low bit forced to 1, so
  // neither endpoint is reachable and log() stays finite.
  double next_uniform01() noexcept;

  // Uniform integer in [0, bound), bound >= 1; rejection sampling, no
  // modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

  // Standard normal via Box-Muller. Draws come in pairs; the spare is
  // cached on the generator, so the sequence is still a pure function of
  // the seed.
  double next_normal() noexcept;

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Hash-combines a base seed with a sequence of stream-key words into a
// child seed. Gives every (trial, purpose) pair its own independent,
// reproducible stream; order of the words matters.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> words) noexcept;

// Stream-key word for a real-valued parameter: the exact bit pattern, so
// distinct doubles always key distinct streams.
std::uint64_t seed_word(double value) noexcept;

}  // namespace scr
