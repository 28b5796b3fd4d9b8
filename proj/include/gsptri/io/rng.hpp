#pragma once

#include <cstdint>
#include <string_view>

#include "gsptri/exact/rational.hpp"

namespace gsptri {

// SplitMix64 (Steele, Lea, Flood 2014).  Chosen because the whole algorithm
// fits in a few lines, so reports can be replicated on any platform:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// All arithmetic is mod 2^64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection of the biased tail.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Nonzero rational: numerator in +-[1, 9], denominator in [1, 9].
  Rational nonzero_rational() {
    const long num = static_cast<long>(uniform(1, 9)) * (below(2) ? -1 : 1);
    const long den = static_cast<long>(uniform(1, 9));
    return Rational(num, den);
  }

  // Derives an independent stream: the parent seed is mixed with a label
  // and an index through one SplitMix64 step each.
  static SplitMix64 substream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a over the label
    for (unsigned char c : label) h = (h ^ c) * 0x100000001B3ULL;
    SplitMix64 mix(seed ^ h);
    SplitMix64 mix2(mix.next() ^ index);
    return SplitMix64(mix2.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace gsptri
