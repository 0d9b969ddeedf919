#pragma once

#include <cstdint>
#include <vector>

namespace polycover {

/// SplitMix64 counter generator. Deterministic across platforms and
/// standard-library versions, unlike std::shuffle / std::mt19937
/// distributions. Streams for parallel work are derived by hashing the
/// seed with stream indices, so replica results do not depend on
/// execution order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), n > 0. Rejection-sampled, unbiased.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform double in [0, 1) with 53 bits.
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; i--) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Independent stream keyed by (seed, a, b); order-insensitive fan-out.
  static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    Rng mix(seed);
    mix.state_ ^= 0x2545f4914f6cdd1dULL * (a + 1);
    mix.next();
    mix.state_ ^= 0x9e3779b97f4a7c15ULL * (b + 1);
    mix.next();
    return mix;
  }

 private:
  std::uint64_t state_;
};

}  // namespace polycover
