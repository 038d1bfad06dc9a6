#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soficlab/matrix.hpp"
#include "soficlab/permutation.hpp"
#include "soficlab/rational.hpp"
#include "soficlab/rng.hpp"

namespace soficlab {

/// The carriers the library works with all model the same concept: a finite
/// group whose elements carry an invariant length in [0,1].
template <class G>
concept InvariantLengthGroup = requires(const G& g, const typename G::Element& a,
                                        const typename G::Element& b, Rng& rng,
                                        std::uint64_t i) {
  typename G::Element;
  { g.identity() } -> std::same_as<typename G::Element>;
  { g.multiply(a, b) } -> std::same_as<typename G::Element>;
  { g.inverse(a) } -> std::same_as<typename G::Element>;
  { g.is_identity(a) } -> std::same_as<bool>;
  { g.equal(a, b) } -> std::same_as<bool>;
  { g.length(a) } -> std::convertible_to<double>;
  { g.size() } -> std::convertible_to<std::uint64_t>;
  { g.element_at(i) } -> std::same_as<typename G::Element>;
  { g.sample(rng) } -> std::same_as<typename G::Element>;
};

/// Finite group given by a multiplication table, with named elements and a
/// stored invariant length function. Element = index into the table.
class TableGroup {
 public:
  using Element = std::uint32_t;

  /// `table[a][b]` is the index of the product a*b. Validates that the table
  /// is a group (Latin square, associativity, identity, inverses) and throws
  /// std::invalid_argument otherwise. Lengths default to the trivial length.
  TableGroup(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> table);

  std::uint64_t size() const { return names_.size(); }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  bool is_identity(Element a) const { return a == identity_; }
  bool equal(Element a, Element b) const { return a == b; }
  Element element_at(std::uint64_t i) const { return static_cast<Element>(i); }
  Element sample(Rng& rng) const { return static_cast<Element>(rng.next_below(size())); }

  double length(Element a) const { return length_[a]; }
  const std::optional<Rational>& exact_length(Element a) const { return exact_length_[a]; }

  const std::string& name(Element a) const { return names_[a]; }
  std::optional<Element> index_of(const std::string& name) const;

  /// Order of the element in the group.
  std::uint64_t element_order(Element a) const { return order_[a]; }
  /// Exponent of the group (lcm of element orders).
  std::uint64_t exponent() const { return exponent_; }

  /// Replaces the length function; values must satisfy the invariant length
  /// axioms, which are re-checked exhaustively (throws if violated).
  void set_lengths(std::vector<Rational> lengths);
  void set_lengths_numeric(std::vector<double> lengths, double tol = 1e-12);

  Element power(Element a, std::uint64_t k) const;

  // Built-in groups used across the test corpus and the CLI.
  static TableGroup cyclic(std::uint32_t m);
  static TableGroup dihedral(std::uint32_t m);  // order 2m
  static TableGroup quaternion8();
  static TableGroup symmetric(std::uint32_t n, std::uint64_t cap = 5040);  // Hamming length
  static TableGroup direct_product(const TableGroup& a, const TableGroup& b);

 private:
  void finalize();

  std::vector<std::string> names_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<Element> inverse_;
  std::vector<double> length_;
  std::vector<std::optional<Rational>> exact_length_;
  std::vector<std::uint64_t> order_;
  Element identity_ = 0;
  std::uint64_t exponent_ = 1;
};

/// S_n with the Hamming length; elements are Permutation values, so the group
/// never needs materializing. element_at enumerates in lexicographic order.
class SymmetricGroup {
 public:
  using Element = Permutation;

  explicit SymmetricGroup(std::uint32_t degree);

  std::uint32_t degree() const { return degree_; }
  std::uint64_t size() const { return factorial_; }
  Element identity() const { return Permutation::identity(degree_); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  bool is_identity(const Element& a) const { return a.is_identity(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  double length(const Element& a) const { return hamming_length(a).to_double(); }
  std::optional<Rational> exact_length(const Element& a) const { return hamming_length(a); }
  Element element_at(std::uint64_t index) const;  // lexicographic unrank
  Element sample(Rng& rng) const { return Permutation::random(degree_, rng); }

 private:
  std::uint32_t degree_;
  std::uint64_t factorial_;
};

/// Finite subgroup of U_n generated by a list of unitaries, realized as a
/// multiplication table plus matrix representatives.
struct UnitarySubgroup {
  enum class LengthKind { HilbertSchmidt, OperatorNorm };

  TableGroup table;
  std::vector<ComplexMatrix> reps;

  /// Closes `generators` under products (cap on the subgroup order guards
  /// against non-finite input) and attaches the chosen length.
  static UnitarySubgroup generate(const std::vector<ComplexMatrix>& generators,
                                  LengthKind kind = LengthKind::HilbertSchmidt,
                                  std::uint64_t order_cap = 1024, double match_tol = 1e-9);
};

struct LengthAxiomReport {
  bool subadditive = true;
  bool symmetric = true;
  bool faithful = true;   // l(x) = 0 iff x = identity
  bool conjugation_invariant = true;
  std::string detail;     // first violation, if any

  bool ok() const { return subadditive && symmetric && faithful && conjugation_invariant; }
};

/// Exhaustive check of the invariant length axioms on a table-backed group,
/// or sampled pairs on groups too large to enumerate.
template <InvariantLengthGroup G>
LengthAxiomReport check_length_axioms(const G& g, std::uint64_t exhaustive_cap = 4096,
                                      std::uint64_t samples = 2048, std::uint64_t seed = 1,
                                      double tol = 1e-12) {
  LengthAxiomReport report;
  auto check_pair = [&](const typename G::Element& x, const typename G::Element& y) {
    double lx = g.length(x), ly = g.length(y);
    if (g.length(g.multiply(x, y)) > lx + ly + tol && report.subadditive) {
      report.subadditive = false;
      report.detail = "l(xy) > l(x) + l(y)";
    }
    if (std::abs(g.length(g.multiply(g.multiply(x, y), g.inverse(x))) - ly) > tol &&
        report.conjugation_invariant) {
      report.conjugation_invariant = false;
      report.detail = "l(xyx^-1) != l(y)";
    }
  };
  auto check_single = [&](const typename G::Element& x) {
    double lx = g.length(x);
    if (lx < -tol || lx > 1.0 + tol || std::abs(g.length(g.inverse(x)) - lx) > tol) {
      if (report.symmetric) {
        report.symmetric = false;
        report.detail = "l(x^-1) != l(x) or l out of [0,1]";
      }
    }
    bool zero = lx <= tol;
    if (zero != g.is_identity(x) && report.faithful) {
      report.faithful = false;
      report.detail = "l(x) = 0 iff x = 1 violated";
    }
  };
  if (g.size() <= exhaustive_cap) {
    for (std::uint64_t i = 0; i < g.size(); ++i) check_single(g.element_at(i));
    for (std::uint64_t i = 0; i < g.size(); ++i)
      for (std::uint64_t j = 0; j < g.size(); ++j)
        check_pair(g.element_at(i), g.element_at(j));
  } else {
    Rng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      auto x = g.sample(rng);
      auto y = g.sample(rng);
      check_single(x);
      check_pair(x, y);
    }
  }
  return report;
}

}  // namespace soficlab
