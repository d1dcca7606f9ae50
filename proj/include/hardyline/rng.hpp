#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hardyline/fft.hpp"

namespace hardyline {

/// splitmix64 finalizer; used both as the seed-derivation hash and as the
/// engine behind the reproducible generators below. All randomness in the
/// library flows through this so that families are bit-identical across
/// platforms and thread schedules.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic per-trial seed, independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
  return mix64(master ^ mix64(trial + 0x51ed2701a9b3e1f5ULL));
}

/// Minimal counter-free splitmix64 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1]; never returns 0 so it is safe inside log().
  double next_uniform() {
    return double((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_uniform();
  }

  /// Box-Muller standard normal (deterministic, no std::distribution).
  double next_normal() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  cplx next_complex_normal() {
    const double re = next_normal();
    const double im = next_normal();
    return cplx(re, im);
  }

  /// Uniform integer in [lo, hi] (inclusive).
  long long next_int(long long lo, long long hi) {
    const std::uint64_t span = std::uint64_t(hi - lo + 1);
    return lo + (long long)(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace hardyline
