#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soficlab/group_model.hpp"
#include "soficlab/matrix.hpp"
#include "soficlab/permutation.hpp"

namespace soficlab {

/// A finite partial map from a group model into S_n: the domain list F and
/// one permutation per domain element. When the identity lies in the domain
/// it must map to the identity permutation (checked by validate()).
struct ApproxMorphism {
  std::shared_ptr<const GroupModel> model;
  std::vector<GroupModel::Element> domain;
  std::vector<Permutation> images;
  std::uint32_t target_degree = 0;

  std::optional<std::size_t> domain_index(const GroupModel::Element& g) const;
  const Permutation* lookup(const GroupModel::Element& g) const;
  void validate() const;
};

/// Companion with unitary images.
struct UnitaryMorphism {
  std::shared_ptr<const GroupModel> model;
  std::vector<GroupModel::Element> domain;
  std::vector<ComplexMatrix> images;
  Eigen::Index target_dim = 0;

  std::optional<std::size_t> domain_index(const GroupModel::Element& g) const;
  void validate() const;
};

/// Measured defects of a morphism into S_n. Multiplication defect is the max
/// of d(Phi(gh), Phi(g)Phi(h)) over pairs g,h in the domain whose product gh
/// is again in the domain; pairs whose product falls outside are never
/// silently included, they are listed as unresolved. Length defect is the max
/// of |l(Phi(g)) - l_Gamma(g)| over domain elements with a decided source
/// length; undecided ones are listed.
struct DefectReport {
  Rational mult_defect{0};
  Rational length_defect{0};
  std::size_t pairs_checked = 0;
  std::vector<std::string> unresolved_pairs;
  std::vector<std::string> length_skipped;
};

struct UnitaryDefectReport {
  double mult_defect = 0.0;
  double length_defect = 0.0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> unresolved_pairs;
  std::vector<std::string> length_skipped;
};

DefectReport defect(const ApproxMorphism& phi);
UnitaryDefectReport defect(const UnitaryMorphism& phi);

/// Folner construction for a lattice: sigma_gamma acts by translation on
/// (-gamma + K) cap K and is completed to a permutation of K by matching the
/// unmatched domain points to the unmatched range points in lexicographic
/// order. Domain of the result: {0} cup F cup F^-1.
struct FolnerResult {
  ApproxMorphism morphism;
  Rational epsilon{0};  // max_{gamma in F cup F^-1} |(gamma+K) delta K| / (2|K|)
  std::vector<GroupModel::Element> window;  // sorted copy of K
};

FolnerResult folner_morphism(std::shared_ptr<const LatticeModel> model,
                             std::vector<GroupModel::Element> window,
                             const std::vector<GroupModel::Element>& translations);

/// (g0,g1) -> Phi0(g0) (x) Phi1(g1) on the direct product model.
ApproxMorphism product_morphism(const ApproxMorphism& phi0, const ApproxMorphism& phi1,
                                std::uint64_t degree_cap = kDefaultDegreeCap);

/// Data describing Gamma as an extension of N (the inner morphism's group) by
/// an amenable quotient Q: the quotient map, a set-theoretic section r, and
/// the identification of kernel elements with N-model elements.
struct ExtensionData {
  std::shared_ptr<const GroupModel> gamma;
  std::shared_ptr<const GroupModel> quotient;
  std::function<GroupModel::Element(const GroupModel::Element&)> project;      // Gamma -> Q
  std::function<GroupModel::Element(const GroupModel::Element&)> section;      // Q -> Gamma
  std::function<GroupModel::Element(const GroupModel::Element&)> to_subgroup;  // ker -> N model

  /// Gamma = N x Q with the obvious projection, section q -> (1,q), and
  /// kernel identification (n,1) -> n.
  static ExtensionData direct_product(std::shared_ptr<const GroupModel> n_model,
                                      std::shared_ptr<const GroupModel> q_model);
};

/// tau_g(i,h) = (sigma_{r(q(gh))^-1 gh}(i), r(q(gh))) when q(gh) lies in the
/// Folner set abar; the blocks left over on either side are matched in index
/// order (identity inside each block), which completes tau_g to a permutation
/// of n x |abar| points. Point encoding: h_index * n + i.
ApproxMorphism extension_morphism(const ApproxMorphism& inner, const ExtensionData& ext,
                                  const std::vector<GroupModel::Element>& abar,
                                  const std::vector<GroupModel::Element>& domain);

/// Free product construction on n x n x V where V is the radius-N ball of
/// the free group on n^2 symbols v_ij acting by (completed) right
/// multiplication; the ball action satisfies no relation of length <= N.
/// Inputs must be nice (fixed-point-free off the identity, inverse-symmetric)
/// on their domains and map into the same S_n. The output domain consists of
/// the alternating words with at most `max_syllables` syllables whose
/// syllables lie in the input domains.
ApproxMorphism free_product_morphism(const ApproxMorphism& phi0, const ApproxMorphism& phi1,
                                     unsigned max_syllables,
                                     std::uint64_t degree_cap = kDefaultDegreeCap);

/// Doubles the degree and repairs the morphism so that sigma'_{g^-1} =
/// (sigma'_g)^-1 holds exactly and sigma'_g is fixed-point-free for every
/// nonidentity g in F. Point encoding on n x 2: i + n*j.
ApproxMorphism nice_repair(const ApproxMorphism& phi,
                           const std::vector<GroupModel::Element>& domain);

/// Composes with the permutation-matrix embedding; per element,
/// l_U(Phi'(g))^2 = l_S(Phi(g)) / 2.
UnitaryMorphism to_unitary(const ApproxMorphism& phi);

}  // namespace soficlab
