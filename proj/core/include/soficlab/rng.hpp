#pragma once

#include <cstdint>
#include <vector>

namespace soficlab {

/// Deterministic splittable generator (splitmix64 core). All randomness in
/// the library flows from an explicit seed through this type, so identical
/// seeds reproduce identical runs on every platform. std::random
/// distributions are avoided on purpose: their output is not pinned by the
/// standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). Rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (deterministic, no cached spare).
  double next_gauss();

  /// Independent child stream; children with distinct labels are
  /// (statistically) independent of each other and of the parent.
  Rng split(std::uint64_t label) const {
    std::uint64_t mixed = state_ ^ (0x9e3779b97f4a7c15ull * (label + 0x632be59bd9b4e019ull));
    Rng child(mixed);
    child.next_u64();
    return child;
  }

  /// Uniform permutation images via Fisher-Yates; returned vector is a
  /// bijection of {0..n-1}.
  std::vector<std::uint32_t> shuffled_identity(std::uint32_t n);

 private:
  std::uint64_t state_;
};

}  // namespace soficlab
