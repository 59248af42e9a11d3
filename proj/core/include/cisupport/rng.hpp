#pragma once

#include <cstdint>

namespace cisupport {

// splitmix64: tiny, portable, bit-stable across platforms. std::mt19937 with
// std:: distributions is not reproducible across standard libraries, and the
// report stream must be byte-identical for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Modulo bias is irrelevant at desk scale.
  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t state_;
};

}  // namespace cisupport
