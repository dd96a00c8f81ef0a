#pragma once

#include <cstdint>

namespace fairslot {

// splitmix64 stream; self-contained so sampling sequences do not depend on
// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n must be > 0
  uint64_t below(uint64_t n) {
    // rejection sampling to avoid modulo bias
    uint64_t threshold = -n % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // uniform in [0, 1)
  double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double in_range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  uint64_t state_;
};

// Derives an independent sub-stream seed from (seed, a, b); used to give each
// advertiser its own sampling stream per outer iteration.
inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b) {
  Rng r(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xc2b2ae3d27d4eb4full));
  r.next_u64();
  return r.next_u64();
}

}  // namespace fairslot
