#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soficlab/length_group.hpp"
#include "soficlab/rational.hpp"
#include "soficlab/word.hpp"

namespace soficlab {

/// Three-valued answer for word problems that may be undecided within the
/// configured work bound.
enum class Tri { True, False, Unknown };

/// A (possibly infinite) group that the approximate-morphism machinery can
/// compute in: multiplication, inversion, and an identity test on represented
/// elements. Elements are opaque integer vectors whose meaning belongs to the
/// concrete model. Identity tests may be partial (Tri::Unknown) for
/// presentation-backed models; they are exact for every other kind.
class GroupModel {
 public:
  using Element = std::vector<std::int64_t>;

  virtual ~GroupModel() = default;

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual Tri is_identity(const Element& a) const = 0;

  virtual bool equal(const Element& a, const Element& b) const {
    return is_identity(multiply(a, inverse(b))) == Tri::True;
  }

  /// Source length for defect measurements. Defaults to the trivial invariant
  /// length (0 at the identity, 1 elsewhere); table models may override.
  virtual std::optional<Rational> exact_length(const Element& a) const {
    switch (is_identity(a)) {
      case Tri::True: return Rational(0);
      case Tri::False: return Rational(1);
      default: return std::nullopt;
    }
  }
  double length(const Element& a) const {
    auto r = exact_length(a);
    return r ? r->to_double() : 1.0;
  }

  virtual std::string describe(const Element& a) const = 0;
  virtual Element parse_element(const std::string& text) const = 0;
  virtual std::string kind() const = 0;

  /// Fixed encoding width, when the model has one (needed to pair models).
  virtual std::optional<std::size_t> element_size() const { return std::nullopt; }
};

/// Z^d with vector elements and additive notation.
class LatticeModel : public GroupModel {
 public:
  explicit LatticeModel(std::uint32_t dim);

  std::uint32_t dim() const { return dim_; }

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  Tri is_identity(const Element& a) const override;
  std::string describe(const Element& a) const override;
  Element parse_element(const std::string& text) const override;  // "1" or "1,-2"
  std::string kind() const override { return "lattice"; }
  std::optional<std::size_t> element_size() const override { return dim_; }

  /// Axis-aligned box [lo_0, hi_0) x ... x [lo_{d-1}, hi_{d-1}).
  std::vector<Element> box(const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) const;

 private:
  std::uint32_t dim_;
};

/// Finite group backed by a multiplication table; elements are {index}.
class TableModel : public GroupModel {
 public:
  explicit TableModel(TableGroup group) : group_(std::move(group)) {}

  const TableGroup& group() const { return group_; }

  Element identity() const override { return {group_.identity()}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  Tri is_identity(const Element& a) const override;
  std::optional<Rational> exact_length(const Element& a) const override;
  std::string describe(const Element& a) const override;
  Element parse_element(const std::string& text) const override;
  std::string kind() const override { return "table"; }
  std::optional<std::size_t> element_size() const override { return 1; }

  std::vector<Element> all_elements() const;

 private:
  TableGroup::Element index_of(const Element& a) const;
  TableGroup group_;
};

/// Direct product of two fixed-width models; elements are concatenations.
class PairModel : public GroupModel {
 public:
  PairModel(std::shared_ptr<const GroupModel> first, std::shared_ptr<const GroupModel> second);

  const GroupModel& first() const { return *first_; }
  const GroupModel& second() const { return *second_; }

  Element pack(const Element& a, const Element& b) const;
  std::pair<Element, Element> unpack(const Element& e) const;

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  Tri is_identity(const Element& a) const override;
  std::string describe(const Element& a) const override;
  Element parse_element(const std::string& text) const override;  // "<a>|<b>"
  std::string kind() const override { return "pair"; }
  std::optional<std::size_t> element_size() const override { return split_ + second_size_; }

 private:
  std::shared_ptr<const GroupModel> first_;
  std::shared_ptr<const GroupModel> second_;
  std::size_t split_;
  std::size_t second_size_;
};

/// Free product of two finite table groups. Elements are alternating words
/// [factor, index, factor, index, ...] in normal form (no identity syllables,
/// adjacent syllables from different factors); the word problem is exact.
class FreeProductModel : public GroupModel {
 public:
  FreeProductModel(TableGroup factor0, TableGroup factor1);

  const TableGroup& factor(int i) const { return i == 0 ? factor0_ : factor1_; }

  /// Normal form of a raw alternating word (reduces adjacent same-factor
  /// syllables, drops identities).
  Element normalize(const Element& raw) const;

  /// Number of syllables of the normal form.
  std::size_t syllable_count(const Element& a) const { return a.size() / 2; }

  /// All normal-form words with at most `max_syllables` syllables.
  std::vector<Element> words_up_to(std::size_t max_syllables) const;

  Element from_syllables(const std::vector<std::pair<int, std::uint32_t>>& syllables) const;

  Element identity() const override { return {}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  Tri is_identity(const Element& a) const override;
  std::string describe(const Element& a) const override;
  Element parse_element(const std::string& text) const override;  // "0:g1*1:g2" or "1"
  std::string kind() const override { return "free_product"; }

 private:
  TableGroup factor0_;
  TableGroup factor1_;
};

/// Finitely presented group with a bounded Dehn-style rewriting oracle.
/// Elements are freely reduced words encoded as signed letters
/// (+k = generator k-1, -k = its inverse). is_identity returns True when the
/// word rewrites to the empty word within the step bound, False for nonempty
/// reduced words when the presentation has no relators (free group), and
/// Unknown otherwise: the word problem is never guessed.
class PresentationModel : public GroupModel {
 public:
  PresentationModel(std::vector<std::string> generators, std::vector<Word> relators,
                    std::size_t max_rewrite_steps = 200);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  Element from_word(const Word& w) const;
  Word to_word(const Element& e) const;

  Element identity() const override { return {}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  Tri is_identity(const Element& a) const override;
  std::string describe(const Element& a) const override;
  Element parse_element(const std::string& text) const override;  // "a*b^-1" or "1"
  std::string kind() const override { return "presentation"; }

 private:
  std::vector<std::int64_t> reduce_free(std::vector<std::int64_t> letters) const;

  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  // All cyclic rotations of the relators and their inverses, as letter strings.
  std::vector<std::vector<std::int64_t>> relator_variants_;
  std::size_t max_rewrite_steps_;
};

}  // namespace soficlab
