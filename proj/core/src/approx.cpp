#include "soficlab/approx.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace soficlab {

namespace {

// Internal comparator so element lists can be sorted / deduplicated by
// encoding; group equality is still the model's business.
bool elem_less(const GroupModel::Element& a, const GroupModel::Element& b) { return a < b; }

std::vector<GroupModel::Element> sorted_unique(std::vector<GroupModel::Element> v) {
  std::sort(v.begin(), v.end(), elem_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::optional<std::size_t> ApproxMorphism::domain_index(const GroupModel::Element& g) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == g || model->equal(domain[i], g)) return i;
  return std::nullopt;
}

const Permutation* ApproxMorphism::lookup(const GroupModel::Element& g) const {
  auto idx = domain_index(g);
  return idx ? &images[*idx] : nullptr;
}

void ApproxMorphism::validate() const {
  if (!model) throw std::invalid_argument("morphism without a group model");
  if (domain.size() != images.size())
    throw std::invalid_argument("morphism domain/image size mismatch");
  if (domain.empty()) throw std::invalid_argument("morphism with empty domain");
  for (const auto& img : images)
    if (img.degree() != target_degree)
      throw std::invalid_argument("morphism image degree mismatch");
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (model->is_identity(domain[i]) == Tri::True && !images[i].is_identity())
      throw std::invalid_argument("morphism must send the identity to the identity");
}

std::optional<std::size_t> UnitaryMorphism::domain_index(const GroupModel::Element& g) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == g || model->equal(domain[i], g)) return i;
  return std::nullopt;
}

void UnitaryMorphism::validate() const {
  if (!model) throw std::invalid_argument("morphism without a group model");
  if (domain.size() != images.size())
    throw std::invalid_argument("morphism domain/image size mismatch");
  if (domain.empty()) throw std::invalid_argument("morphism with empty domain");
  for (const auto& img : images) {
    if (img.rows() != target_dim || img.cols() != target_dim)
      throw std::invalid_argument("morphism image dimension mismatch");
    if (!is_unitary(img)) throw std::domain_error("morphism image is not unitary");
  }
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (model->is_identity(domain[i]) == Tri::True &&
        hs_norm(images[i] - ComplexMatrix::Identity(target_dim, target_dim)) > 1e-12)
      throw std::invalid_argument("morphism must send the identity to the identity");
}

DefectReport defect(const ApproxMorphism& phi) {
  phi.validate();
  DefectReport report;
  const auto& model = *phi.model;
  for (std::size_t i = 0; i < phi.domain.size(); ++i) {
    for (std::size_t j = 0; j < phi.domain.size(); ++j) {
      GroupModel::Element prod = model.multiply(phi.domain[i], phi.domain[j]);
      auto k = phi.domain_index(prod);
      if (!k) {
        report.unresolved_pairs.push_back(model.describe(phi.domain[i]) + "," +
                                          model.describe(phi.domain[j]));
        continue;
      }
      ++report.pairs_checked;
      Rational d = hamming_distance(phi.images[*k], phi.images[i] * phi.images[j]);
      report.mult_defect = max(report.mult_defect, d);
    }
  }
  for (std::size_t i = 0; i < phi.domain.size(); ++i) {
    auto source = model.exact_length(phi.domain[i]);
    if (!source) {
      report.length_skipped.push_back(model.describe(phi.domain[i]));
      continue;
    }
    Rational gap = (hamming_length(phi.images[i]) - *source).abs();
    report.length_defect = max(report.length_defect, gap);
  }
  return report;
}

UnitaryDefectReport defect(const UnitaryMorphism& phi) {
  phi.validate();
  UnitaryDefectReport report;
  const auto& model = *phi.model;
  for (std::size_t i = 0; i < phi.domain.size(); ++i) {
    for (std::size_t j = 0; j < phi.domain.size(); ++j) {
      GroupModel::Element prod = model.multiply(phi.domain[i], phi.domain[j]);
      auto k = phi.domain_index(prod);
      if (!k) {
        report.unresolved_pairs.push_back(model.describe(phi.domain[i]) + "," +
                                          model.describe(phi.domain[j]));
        continue;
      }
      ++report.pairs_checked;
      double d = hs_distance(phi.images[*k], phi.images[i] * phi.images[j]);
      report.mult_defect = std::max(report.mult_defect, d);
    }
  }
  for (std::size_t i = 0; i < phi.domain.size(); ++i) {
    auto source = model.exact_length(phi.domain[i]);
    if (!source) {
      report.length_skipped.push_back(model.describe(phi.domain[i]));
      continue;
    }
    report.length_defect =
        std::max(report.length_defect, std::abs(hs_length(phi.images[i]) - source->to_double()));
  }
  return report;
}

// --------------------------------------------------------------------------
// Folner construction
// --------------------------------------------------------------------------

namespace {

// Permutation of `window` (sorted) acting by +gamma where the translate stays
// inside, completed by lexicographic matching of leftovers.
Permutation translation_permutation(const LatticeModel& model,
                                    const std::vector<GroupModel::Element>& window,
                                    const GroupModel::Element& gamma) {
  const std::size_t n = window.size();
  auto position = [&](const GroupModel::Element& x) -> std::optional<std::uint32_t> {
    auto it = std::lower_bound(window.begin(), window.end(), x);
    if (it != window.end() && *it == x)
      return static_cast<std::uint32_t>(it - window.begin());
    return std::nullopt;
  };
  std::vector<std::uint32_t> images(n, UINT32_MAX);
  std::vector<bool> hit(n, false);
  std::vector<std::uint32_t> unmatched_src;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto dst = position(model.multiply(gamma, window[i]));
    if (dst) {
      images[i] = *dst;
      hit[*dst] = true;
    } else {
      unmatched_src.push_back(i);
    }
  }
  std::vector<std::uint32_t> unmatched_dst;
  for (std::uint32_t i = 0; i < n; ++i)
    if (!hit[i]) unmatched_dst.push_back(i);
  for (std::size_t k = 0; k < unmatched_src.size(); ++k)
    images[unmatched_src[k]] = unmatched_dst[k];
  return Permutation(std::move(images));
}

}  // namespace

FolnerResult folner_morphism(std::shared_ptr<const LatticeModel> model,
                             std::vector<GroupModel::Element> window,
                             const std::vector<GroupModel::Element>& translations) {
  if (window.empty()) throw std::invalid_argument("Folner window must be nonempty");
  window = sorted_unique(std::move(window));

  std::vector<GroupModel::Element> closed;
  closed.push_back(model->identity());
  for (const auto& g : translations) {
    closed.push_back(g);
    closed.push_back(model->inverse(g));
  }
  closed = sorted_unique(std::move(closed));

  FolnerResult out;
  out.window = window;
  out.morphism.model = model;
  out.morphism.target_degree = static_cast<std::uint32_t>(window.size());
  Rational eps(0);
  for (const auto& g : closed) {
    out.morphism.domain.push_back(g);
    out.morphism.images.push_back(translation_permutation(*model, window, g));
    if (model->is_identity(g) == Tri::True) continue;
    // |(g+K) delta K| = 2 |K \ (g+K)| since both sets have |K| elements.
    std::size_t missing = 0;
    for (const auto& x : window) {
      auto shifted = model->multiply(g, x);
      if (!std::binary_search(window.begin(), window.end(), shifted)) ++missing;
    }
    eps = max(eps, Rational(static_cast<std::int64_t>(missing),
                            static_cast<std::int64_t>(window.size())));
  }
  out.epsilon = eps;
  out.morphism.validate();
  return out;
}

// --------------------------------------------------------------------------
// Direct product
// --------------------------------------------------------------------------

ApproxMorphism product_morphism(const ApproxMorphism& phi0, const ApproxMorphism& phi1,
                                std::uint64_t degree_cap) {
  phi0.validate();
  phi1.validate();
  auto pair_model = std::make_shared<PairModel>(phi0.model, phi1.model);
  ApproxMorphism out;
  out.model = pair_model;
  const std::uint64_t n = phi0.target_degree, m = phi1.target_degree;
  if (m != 0 && n > degree_cap / m)
    throw std::overflow_error("product morphism degree exceeds cap");
  out.target_degree = static_cast<std::uint32_t>(n * m);
  for (std::size_t i = 0; i < phi0.domain.size(); ++i)
    for (std::size_t j = 0; j < phi1.domain.size(); ++j) {
      out.domain.push_back(pair_model->pack(phi0.domain[i], phi1.domain[j]));
      out.images.push_back(direct_tensor(phi0.images[i], phi1.images[j], degree_cap));
    }
  out.validate();
  return out;
}

// --------------------------------------------------------------------------
// Extension by an amenable quotient
// --------------------------------------------------------------------------

ExtensionData ExtensionData::direct_product(std::shared_ptr<const GroupModel> n_model,
                                            std::shared_ptr<const GroupModel> q_model) {
  auto pair = std::make_shared<PairModel>(n_model, q_model);
  ExtensionData data;
  data.gamma = pair;
  data.quotient = q_model;
  data.project = [pair](const GroupModel::Element& g) { return pair->unpack(g).second; };
  data.section = [pair, n_model](const GroupModel::Element& q) {
    return pair->pack(n_model->identity(), q);
  };
  data.to_subgroup = [pair](const GroupModel::Element& g) { return pair->unpack(g).first; };
  return data;
}

ApproxMorphism extension_morphism(const ApproxMorphism& inner, const ExtensionData& ext,
                                  const std::vector<GroupModel::Element>& abar,
                                  const std::vector<GroupModel::Element>& domain) {
  inner.validate();
  if (abar.empty()) throw std::invalid_argument("extension needs a nonempty Folner set");
  const auto& q = *ext.quotient;
  const auto& gamma = *ext.gamma;

  // Section consistency: projecting the section must give back the coset.
  std::vector<GroupModel::Element> a_list;
  for (const auto& qbar : abar) {
    GroupModel::Element rep = ext.section(qbar);
    if (!q.equal(ext.project(rep), qbar))
      throw std::invalid_argument("section inconsistent with quotient map");
    a_list.push_back(std::move(rep));
  }

  auto abar_index = [&](const GroupModel::Element& qe) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < abar.size(); ++i)
      if (q.equal(abar[i], qe)) return i;
    return std::nullopt;
  };

  const std::uint32_t n = inner.target_degree;
  const std::size_t blocks = abar.size();
  ApproxMorphism out;
  out.model = ext.gamma;
  out.target_degree = static_cast<std::uint32_t>(n * blocks);

  for (const auto& g : domain) {
    std::vector<std::uint32_t> block_dst(blocks, UINT32_MAX);
    std::vector<const Permutation*> block_perm(blocks, nullptr);
    std::vector<bool> hit(blocks, false);
    for (std::size_t h = 0; h < blocks; ++h) {
      GroupModel::Element gh = gamma.multiply(g, a_list[h]);
      auto j = abar_index(ext.project(gh));
      if (!j) continue;
      GroupModel::Element kernel_part =
          gamma.multiply(gamma.inverse(a_list[*j]), gh);  // r(q(gh))^-1 gh in N
      const Permutation* sigma = inner.lookup(ext.to_subgroup(kernel_part));
      if (!sigma)
        throw std::invalid_argument(
            "inner morphism domain does not cover the required kernel element " +
            gamma.describe(kernel_part));
      block_dst[h] = static_cast<std::uint32_t>(*j);
      block_perm[h] = sigma;
      hit[*j] = true;
    }
    // Leftover blocks on both sides are matched in index order.
    std::vector<std::uint32_t> src_left, dst_left;
    for (std::uint32_t h = 0; h < blocks; ++h)
      if (block_dst[h] == UINT32_MAX) src_left.push_back(h);
    for (std::uint32_t h = 0; h < blocks; ++h)
      if (!hit[h]) dst_left.push_back(h);
    for (std::size_t k = 0; k < src_left.size(); ++k) block_dst[src_left[k]] = dst_left[k];

    std::vector<std::uint32_t> images(out.target_degree);
    for (std::uint32_t h = 0; h < blocks; ++h)
      for (std::uint32_t i = 0; i < n; ++i)
        images[static_cast<std::size_t>(h) * n + i] =
            block_dst[h] * n + (block_perm[h] ? (*block_perm[h])(i) : i);
    out.domain.push_back(g);
    out.images.push_back(Permutation(std::move(images)));
  }
  out.validate();
  return out;
}

// --------------------------------------------------------------------------
// Free product
// --------------------------------------------------------------------------

namespace {

// Reduced words of length <= radius over `symbols` free generators, in
// (length, lex) order. Letters are +-(s+1).
std::vector<std::vector<std::int32_t>> free_ball(std::uint32_t symbols, unsigned radius,
                                                 std::uint64_t size_cap) {
  std::vector<std::vector<std::int32_t>> ball;
  ball.push_back({});
  std::size_t level_begin = 0;
  for (unsigned len = 1; len <= radius; ++len) {
    std::size_t level_end = ball.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (std::uint32_t s = 0; s < symbols; ++s) {
        for (int sign = 0; sign < 2; ++sign) {
          std::int32_t letter = sign == 0 ? static_cast<std::int32_t>(s + 1)
                                          : -static_cast<std::int32_t>(s + 1);
          if (!ball[w].empty() && ball[w].back() == -letter) continue;
          if (ball.size() >= size_cap) throw std::overflow_error("free ball exceeds cap");
          auto word = ball[w];
          word.push_back(letter);
          ball.push_back(std::move(word));
        }
      }
    }
    level_begin = level_end;
  }
  // Levels are generated in lex order of the parent, then letter order; sort
  // whole ball canonically anyway so the matching below is reproducible.
  std::sort(ball.begin(), ball.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return ball;
}

// Right multiplication by `letter` on the ball, completed to a permutation by
// matching leftover sources to leftover targets in index order.
Permutation ball_right_mult(const std::vector<std::vector<std::int32_t>>& ball,
                            const std::map<std::vector<std::int32_t>, std::uint32_t>& index,
                            unsigned radius, std::int32_t letter) {
  const std::size_t n = ball.size();
  std::vector<std::uint32_t> images(n, UINT32_MAX);
  std::vector<bool> hit(n, false);
  std::vector<std::uint32_t> left_src;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::int32_t> w = ball[i];
    if (!w.empty() && w.back() == -letter)
      w.pop_back();
    else
      w.push_back(letter);
    if (w.size() <= radius) {
      std::uint32_t j = index.at(w);
      images[i] = j;
      hit[j] = true;
    } else {
      left_src.push_back(i);
    }
  }
  std::vector<std::uint32_t> left_dst;
  for (std::uint32_t i = 0; i < n; ++i)
    if (!hit[i]) left_dst.push_back(i);
  for (std::size_t k = 0; k < left_src.size(); ++k) images[left_src[k]] = left_dst[k];
  return Permutation(std::move(images));
}

void require_nice(const ApproxMorphism& phi, const char* which) {
  for (std::size_t i = 0; i < phi.domain.size(); ++i) {
    if (phi.model->is_identity(phi.domain[i]) == Tri::True) continue;
    if (phi.images[i].count_fixed_points() != 0)
      throw std::invalid_argument(std::string(which) +
                                  " morphism is not fixed-point-free on " +
                                  phi.model->describe(phi.domain[i]));
    const Permutation* inv = phi.lookup(phi.model->inverse(phi.domain[i]));
    if (!inv || *inv != phi.images[i].inverse())
      throw std::invalid_argument(std::string(which) +
                                  " morphism is not inverse-symmetric on " +
                                  phi.model->describe(phi.domain[i]));
  }
}

}  // namespace

ApproxMorphism free_product_morphism(const ApproxMorphism& phi0, const ApproxMorphism& phi1,
                                     unsigned max_syllables, std::uint64_t degree_cap) {
  phi0.validate();
  phi1.validate();
  if (phi0.target_degree != phi1.target_degree)
    throw std::invalid_argument("free product inputs must share one S_n");
  require_nice(phi0, "first");
  require_nice(phi1, "second");
  auto* t0 = dynamic_cast<const TableModel*>(phi0.model.get());
  auto* t1 = dynamic_cast<const TableModel*>(phi1.model.get());
  if (!t0 || !t1)
    throw std::invalid_argument("free product construction expects table-backed factors");

  const std::uint32_t n = phi0.target_degree;
  const std::uint32_t symbols = n * n;
  // Degree is n^2 |V|; bound |V| via the cap before building the ball.
  std::uint64_t ball_cap = degree_cap / (static_cast<std::uint64_t>(n) * n) + 1;
  auto ball = free_ball(symbols, max_syllables, ball_cap);
  const std::uint64_t v_size = ball.size();
  std::uint64_t degree64 = static_cast<std::uint64_t>(n) * n * v_size;
  if (degree64 > degree_cap) throw std::overflow_error("free product degree exceeds cap");

  std::map<std::vector<std::int32_t>, std::uint32_t> ball_index;
  for (std::uint32_t i = 0; i < v_size; ++i) ball_index[ball[i]] = i;

  // rho[i][j] = completed right multiplication by v_ij, plus inverses.
  std::vector<Permutation> rho(symbols), rho_inv(symbols);
  for (std::uint32_t s = 0; s < symbols; ++s) {
    rho[s] = ball_right_mult(ball, ball_index, max_syllables, static_cast<std::int32_t>(s + 1));
    rho_inv[s] = rho[s].inverse();
  }

  const std::uint32_t degree = static_cast<std::uint32_t>(degree64);
  auto point = [n, v_size](std::uint32_t i, std::uint32_t j, std::uint32_t w) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * n + j) * v_size + w);
  };

  // tau for one syllable.
  auto syllable_perm = [&](int factor, const Permutation& sigma) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t w = 0; w < v_size; ++w) {
          if (factor == 0) {
            images[point(i, j, w)] = point(sigma(i), j, w);
          } else {
            std::uint32_t j2 = sigma(j);
            std::uint32_t w2 = rho[i * n + j2](rho_inv[i * n + j](w));
            images[point(i, j, w)] = point(i, j2, w2);
          }
        }
    return Permutation(std::move(images));
  };

  auto fp = std::make_shared<FreeProductModel>(t0->group(), t1->group());
  ApproxMorphism out;
  out.model = fp;
  out.target_degree = degree;

  // Cache per-syllable permutations on demand.
  std::map<std::pair<int, std::uint32_t>, Permutation> syllable_cache;
  auto syllable_image = [&](int factor, std::uint32_t idx) -> const Permutation& {
    auto key = std::make_pair(factor, idx);
    auto it = syllable_cache.find(key);
    if (it != syllable_cache.end()) return it->second;
    const ApproxMorphism& phi = factor == 0 ? phi0 : phi1;
    const Permutation* sigma = phi.lookup({static_cast<std::int64_t>(idx)});
    if (!sigma) throw std::logic_error("syllable outside input domain");
    return syllable_cache.emplace(key, syllable_perm(factor, *sigma)).first->second;
  };

  for (const auto& word : fp->words_up_to(max_syllables)) {
    // Keep only words whose syllables lie in the respective input domains.
    bool ok = true;
    for (std::size_t s = 0; s < word.size() && ok; s += 2) {
      int f = static_cast<int>(word[s]);
      const ApproxMorphism& phi = f == 0 ? phi0 : phi1;
      if (!phi.lookup({word[s + 1]})) ok = false;
    }
    if (!ok) continue;
    Permutation tau = Permutation::identity(degree);
    for (std::size_t s = 0; s < word.size(); s += 2)
      tau = tau * syllable_image(static_cast<int>(word[s]),
                                 static_cast<std::uint32_t>(word[s + 1]));
    out.domain.push_back(word);
    out.images.push_back(std::move(tau));
  }
  out.validate();
  return out;
}

// --------------------------------------------------------------------------
// Nice repair
// --------------------------------------------------------------------------

ApproxMorphism nice_repair(const ApproxMorphism& phi,
                           const std::vector<GroupModel::Element>& domain) {
  phi.validate();
  const auto& model = *phi.model;
  const std::uint32_t n = phi.target_degree;
  const std::uint32_t n2 = 2 * n;

  std::vector<GroupModel::Element> dom;
  for (const auto& g : domain) {
    bool dup = false;
    for (const auto& h : dom)
      if (model.equal(g, h)) dup = true;
    if (!dup) dom.push_back(g);
  }

  ApproxMorphism out;
  out.model = phi.model;
  out.target_degree = n2;
  out.domain = dom;
  out.images.assign(dom.size(), Permutation::identity(n2));

  std::vector<bool> done(dom.size(), false);
  auto encode = [n](std::uint32_t i, std::uint32_t j) { return i + n * j; };

  for (std::size_t gi = 0; gi < dom.size(); ++gi) {
    if (done[gi]) continue;
    Tri idq = model.is_identity(dom[gi]);
    if (idq == Tri::Unknown)
      throw std::invalid_argument("nice_repair requires a decidable identity test");
    if (idq == Tri::True) {
      done[gi] = true;
      continue;  // identity stays identity
    }
    GroupModel::Element ginv = model.inverse(dom[gi]);
    std::optional<std::size_t> gj;
    for (std::size_t k = 0; k < dom.size(); ++k)
      if (model.equal(dom[k], ginv)) gj = k;
    if (!gj)
      throw std::invalid_argument("nice_repair domain must be symmetric; missing inverse of " +
                                  model.describe(dom[gi]));
    const Permutation* sigma_p = phi.lookup(dom[gi]);
    const Permutation* sigma_inv_p = phi.lookup(ginv);
    if (!sigma_p || !sigma_inv_p)
      throw std::invalid_argument("nice_repair input must be defined on the domain and inverses");
    const Permutation& sigma = *sigma_p;
    const Permutation& sigma_inv = *sigma_inv_p;

    // A_g: points where sigma_{g^-1} undoes sigma_g and sigma_g moves.
    std::vector<bool> in_a(n, false), in_ainv(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (sigma_inv(sigma(i)) == i && sigma(i) != i) in_a[i] = true;
      if (sigma(sigma_inv(i)) == i && sigma_inv(i) != i) in_ainv[i] = true;
    }

    std::vector<std::uint32_t> d_src, d_dst, comp;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (in_ainv[i] && !in_a[i]) d_src.push_back(i);  // A_{g^-1} \ A_g
      if (in_a[i] && !in_ainv[i]) d_dst.push_back(i);  // A_g \ A_{g^-1}
      if (!in_a[i] && !in_ainv[i]) comp.push_back(i);
    }
    if (d_src.size() != d_dst.size())
      throw std::logic_error("nice_repair: leftover sets of different sizes");

    std::vector<std::uint32_t> images(n2, UINT32_MAX);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!in_a[i]) continue;
      for (std::uint32_t j = 0; j < 2; ++j) images[encode(i, j)] = encode(sigma(i), j);
    }
    // phi_g: (A_{g^-1} \ A_g) x 2 -> (A_g \ A_{g^-1}) x 2, lex matched.
    for (std::size_t k = 0; k < d_src.size(); ++k)
      for (std::uint32_t j = 0; j < 2; ++j)
        images[encode(d_src[k], j)] = encode(d_dst[k], j);
    // psi_g: fixed-point-free involution swapping the two sheets.
    for (std::uint32_t i : comp)
      for (std::uint32_t j = 0; j < 2; ++j) images[encode(i, j)] = encode(i, 1 - j);

    Permutation repaired(std::move(images));
    out.images[gi] = repaired;
    done[gi] = true;
    if (*gj != gi) {
      out.images[*gj] = repaired.inverse();
      done[*gj] = true;
    }
  }
  out.validate();
  return out;
}

UnitaryMorphism to_unitary(const ApproxMorphism& phi) {
  phi.validate();
  UnitaryMorphism out;
  out.model = phi.model;
  out.domain = phi.domain;
  out.target_dim = phi.target_degree;
  out.images.reserve(phi.images.size());
  for (const auto& sigma : phi.images) out.images.push_back(permutation_matrix(sigma));
  out.validate();
  return out;
}

}  // namespace soficlab
