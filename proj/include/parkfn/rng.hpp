#pragma once

#include <cstdint>

namespace parkfn {

// SplitMix64 (Steele, Lea and Flood). Output is fixed across platforms so
// seeded runs are byte-stable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Uniform value in [0, bound) without modulo bias: draws are rejected until
// one lands below the largest multiple of bound.
inline std::uint64_t bounded(SplitMix64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0ull - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t u = rng.next();
    if (u >= threshold) return u % bound;
  }
}

// Independent generator for sample #index under a fixed master seed, so
// sampling can be partitioned without changing the stream.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = detail::mix64(seed + 0x9E3779B97F4A7C15ull) ^
                    detail::mix64(index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull);
  return SplitMix64(s);
}

}  // namespace parkfn
