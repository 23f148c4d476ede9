#ifndef LSC_RNG_HPP
#define LSC_RNG_HPP

#include <cstdint>

namespace lsc {

// SplitMix64. Fixed algorithm so that seeded runs reproduce bit-for-bit
// across platforms and compilers; std::mt19937 distributions do not give
// that guarantee.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); the modulo bias is irrelevant for our use
  // (sampling matrix entries), determinism is what matters.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

}  // namespace lsc

#endif
