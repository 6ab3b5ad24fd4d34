#pragma once

#include <cstdint>

#include "asepk/rational.hpp"

namespace asepk {

// SplitMix64 in counter mode: output k of stream (seed, id) is mix(key + k * golden).
// Bit-exact on every platform; no std distributions are involved.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : key_(mix(seed ^ mix(stream + kGolden))) {}

  std::uint64_t next() { return mix(key_ + (++counter_) * kGolden); }

  // Uniform integer in [lo, hi] by rejection.
  long uniform_int(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Nonzero rational with bounded numerator and denominator.
  Rational rational(long max_num = 12, long max_den = 9) {
    long num = 0;
    while (num == 0) num = uniform_int(-max_num, max_num);
    return make_rational(num, uniform_int(1, max_den));
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace asepk
