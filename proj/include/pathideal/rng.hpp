#pragma once

#include <cstdint>

namespace pathideal {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over the <random> engines
// because its output and the bounded draw below are fully specified, so
// corpora can be regenerated bit-for-bit from other languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Derives an independent stream; the parent advances by one draw.
  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

 private:
  std::uint64_t state_;
};

// Stable seed for the `index`-th instance of a named cell.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t index) {
  SplitMix64 mix(seed);
  std::uint64_t s = mix.next();
  s = SplitMix64(s ^ (a * 0x100000001b3ULL)).next();
  s = SplitMix64(s ^ (b * 0xc2b2ae3d27d4eb4fULL)).next();
  return SplitMix64(s ^ index).next();
}

}  // namespace pathideal
