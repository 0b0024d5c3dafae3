#ifndef WLCIRC_UTIL_HPP
#define WLCIRC_UTIL_HPP

#include <cstdint>

namespace wlcirc {

/// Deterministic cross-platform RNG (splitmix64). All randomized search in
/// this project takes explicit seeds and goes through this generator so that
/// reports are reproducible byte-for-byte.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling to avoid modulo bias
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return next() & 1u; }

 private:
  std::uint64_t state_;
};

}  // namespace wlcirc

#endif
