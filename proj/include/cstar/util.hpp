#pragma once

#include <cstdint>

namespace cstar {

// splitmix64: tiny deterministic generator with a well-mixed output
// function. Used for all randomized searches so that results are
// reproducible across platforms and standard-library versions
// (std::uniform_int_distribution is not portable bit-for-bit).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Low `bits` random bits (bits <= 64).
  uint64_t next_bits(int bits) {
    uint64_t v = next();
    return bits >= 64 ? v : (v & ((uint64_t{1} << bits) - 1));
  }

  // Uniform value in [0, bound). Rejection-free modulo; the bias is
  // irrelevant for search purposes and keeping it branch-free keeps the
  // stream position deterministic.
  uint64_t next_below(uint64_t bound) { return bound ? next() % bound : 0; }

 private:
  uint64_t state_;
};

// Stable way to derive one independent stream per (seed, index) pair:
// run the root seed through one splitmix step per component.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  SplitMix64 g(seed ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
  return g.next();
}

// Mask with the low n bits set (n in [0, 64]).
inline uint64_t low_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

}  // namespace cstar
