#pragma once

// Deterministic PRNG (splitmix64) so seeded runs are byte-identical
// across platforms; the standard distributions are not portable.

#include <cstdint>

namespace zsurf {

class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  // uniform in [lo, hi]
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
  bool flip() { return next() & 1; }

private:
  uint64_t state_;
};

}  // namespace zsurf
