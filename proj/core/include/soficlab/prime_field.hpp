#pragma once

#include <cstdint>
#include <vector>

#include "soficlab/permutation.hpp"
#include "soficlab/rational.hpp"
#include "soficlab/rng.hpp"

namespace soficlab {

bool is_prime(std::uint64_t p);

/// Arithmetic in F_p for p < 2^31 (products fit in 64 bits).
struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on 0
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
};

/// Dense n x n matrix over F_p.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(std::uint32_t p, std::uint32_t n);

  static PrimeFieldMatrix identity(std::uint32_t p, std::uint32_t n);
  static PrimeFieldMatrix zero(std::uint32_t p, std::uint32_t n) {
    return PrimeFieldMatrix(p, n);
  }
  /// P_sigma - I and P_sigma over F_p.
  static PrimeFieldMatrix permutation(std::uint32_t p, const Permutation& sigma);
  static PrimeFieldMatrix random(std::uint32_t p, std::uint32_t n, Rng& rng);

  std::uint32_t dim() const { return n_; }
  std::uint32_t prime() const { return field_.p; }
  const PrimeField& field() const { return field_; }

  std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return data_[idx(r, c)]; }
  void set(std::uint32_t r, std::uint32_t c, std::uint32_t v) { data_[idx(r, c)] = v % field_.p; }

  PrimeFieldMatrix operator+(const PrimeFieldMatrix& o) const;
  PrimeFieldMatrix operator-(const PrimeFieldMatrix& o) const;
  PrimeFieldMatrix operator*(const PrimeFieldMatrix& o) const;
  PrimeFieldMatrix scaled(std::uint32_t lambda) const;
  PrimeFieldMatrix transposed() const;

  bool operator==(const PrimeFieldMatrix& o) const {
    return field_.p == o.field_.p && n_ == o.n_ && data_ == o.data_;
  }

  /// Matrix rank by Gaussian elimination with first-nonzero pivoting and a
  /// fixed column order (exact arithmetic needs no pivot strategy).
  std::uint32_t rank() const;

 private:
  std::size_t idx(std::uint32_t r, std::uint32_t c) const {
    return static_cast<std::size_t>(r) * n_ + c;
  }
  PrimeField field_;
  std::uint32_t n_;
  std::vector<std::uint32_t> data_;
};

/// Normalized rank N(x) = rank(x)/n, an exact rational in [0,1].
Rational normalized_rank(const PrimeFieldMatrix& m);

/// Both sides of N(P_sigma - I) = 1 - c(sigma)/n where c counts cycles
/// (fixed points included). Equality holds over every prime field.
struct PermRankIdentity {
  Rational lhs;
  Rational rhs;
  bool equal;
};
PermRankIdentity perm_rank_identity(const Permutation& sigma, std::uint32_t p);

/// Evaluates N(sum_i lambda_i P_{sigma_i}) against the lower bound
/// (1 - eps*k)/k^2, eps = min_i (1 - l(sigma_i)).
struct RankLowerBoundProbe {
  Rational value;
  Rational bound;
  bool holds;
};
RankLowerBoundProbe rank_lower_bound_probe(const std::vector<Permutation>& sigmas,
                                           const std::vector<std::uint32_t>& lambdas,
                                           std::uint32_t p);

/// max |N(xy - I) - N(yx - I)| over the sample pairs; zero in a finite rank
/// ring, so any nonzero value is an implementation bug.
Rational finite_rank_ring_probe(
    const std::vector<std::pair<PrimeFieldMatrix, PrimeFieldMatrix>>& samples);

}  // namespace soficlab
