#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "soficlab/rational.hpp"
#include "soficlab/rng.hpp"

namespace soficlab {

/// Default cap on the degree of generated permutations (tensor powers and
/// direct tensors can blow up quickly).
inline constexpr std::uint64_t kDefaultDegreeCap = 10'000'000;

/// A permutation of {0..n-1}, stored by its image sequence.
/// Composition convention throughout: (s*t)(i) = s(t(i)), i.e. t acts first.
/// Words evaluate left-to-right under this convention.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on n points.
  static Permutation identity(std::uint32_t n);

  /// From images; validates that `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  /// Transposition (a b) inside S_n.
  static Permutation transposition(std::uint32_t n, std::uint32_t a, std::uint32_t b);

  /// The n-cycle (0 1 2 ... n-1), i.e. i -> i+1 mod n.
  static Permutation full_cycle(std::uint32_t n);

  /// Cycle through the given points (c0 -> c1 -> ... -> c0), identity elsewhere.
  static Permutation from_cycle(std::uint32_t n, const std::vector<std::uint32_t>& cycle);

  /// Uniformly random element of S_n.
  static Permutation random(std::uint32_t n, Rng& rng);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(std::int64_t k) const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator!=(const Permutation& other) const { return !(*this == other); }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

  std::uint64_t count_fixed_points() const;
  std::uint64_t count_moved_points() const { return degree() - count_fixed_points(); }

  /// Number of cycles including fixed points.
  std::uint64_t cycle_count() const;

  /// Cycle type as a sorted (descending) list of cycle lengths >= 2.
  std::vector<std::uint32_t> cycle_type() const;

  /// Order of the permutation as an element of S_n.
  std::uint64_t order() const;

  std::string str() const;

 private:
  std::vector<std::uint32_t> images_;
};

/// Hamming length: fraction of non-fixed points, as an exact rational in [0,1].
Rational hamming_length(const Permutation& p);

/// Normalized Hamming distance d(s,t) = hamming_length(s * t^-1).
Rational hamming_distance(const Permutation& s, const Permutation& t);

/// k-th tensor power acting on n^k points under big-endian mixed-radix
/// encoding of (i_1..i_k). Satisfies 1 - l(p^(x)k) = (1 - l(p))^k exactly.
Permutation tensor_power_perm(const Permutation& p, unsigned k,
                              std::uint64_t degree_cap = kDefaultDegreeCap);

/// (s0 (x) s1)(i*m + j) = s0(i)*m + s1(j), degree n*m.
Permutation direct_tensor(const Permutation& s0, const Permutation& s1,
                          std::uint64_t degree_cap = kDefaultDegreeCap);

/// Block embedding into S_N, N = k*n + r: k disjoint copies of p on the
/// leading blocks, identity on the remainder. |l_N(embed) - l_n(p)| <= 1/k.
Permutation block_embed(const Permutation& p, std::uint32_t N);

/// Enumerates all of S_n in lexicographic order of image sequences.
/// Throws if n! would exceed `cap`.
std::vector<Permutation> all_permutations(std::uint32_t n, std::uint64_t cap = 5040);

}  // namespace soficlab
