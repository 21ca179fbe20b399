#ifndef DEGBURGERS_RNG_HPP
#define DEGBURGERS_RNG_HPP

#include <cstdint>

#include "degburgers/rationals.hpp"

namespace dgb {

/// SplitMix64. Deterministic across platforms, unlike std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  /// Random rational p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(int max_num = 50, int max_den = 50, bool nonzero = false) {
    for (;;) {
      std::int64_t p = uniform_int(-max_num, max_num);
      std::int64_t q = uniform_int(1, max_den);
      if (nonzero && p == 0) continue;
      return Rational(p, q);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace dgb

#endif
