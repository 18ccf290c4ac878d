#pragma once

#include <cstdint>
#include <limits>

namespace stablewelfare {

// SplitMix64 (Steele, Lea & Flood): a 64-bit counter advanced by a fixed odd
// increment and passed through an invertible mixer. Every sampler below is
// written out by hand so streams are identical on every platform; the
// standard <random> distributions are implementation-defined.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t UniformBelow(std::uint64_t bound);
  // Standard normal via the Marsaglia polar method.
  double Gaussian();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// The SplitMix64 finaliser.
std::uint64_t Mix64(std::uint64_t x);

// Seed for the independent stream `index` of purpose `tag` under `seed`.
std::uint64_t SubstreamSeed(std::uint64_t seed, std::uint64_t index,
                            std::uint64_t tag = 0);

}  // namespace stablewelfare
