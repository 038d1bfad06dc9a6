#include "soficlab/length_group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace soficlab {

TableGroup::TableGroup(std::vector<std::string> names,
                       std::vector<std::vector<std::uint32_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("table group must be nonempty");
  if (table_.size() != n) throw std::invalid_argument("table row count mismatch");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("table column count mismatch");
    std::vector<bool> seen(n, false);
    for (std::uint32_t v : row) {
      if (v >= n || seen[v]) throw std::invalid_argument("table row is not a bijection");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t v = table_[i][j];
      if (seen[v]) throw std::invalid_argument("table column is not a bijection");
      seen[v] = true;
    }
  }
  finalize();
}

void TableGroup::finalize() {
  const std::size_t n = names_.size();
  bool found_identity = false;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found_identity = true;
      break;
    }
  }
  if (!found_identity) throw std::invalid_argument("table has no identity element");

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("table is not associative");

  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("table element without inverse");
  }

  order_.assign(n, 1);
  exponent_ = 1;
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint64_t ord = 1;
    std::uint32_t acc = a;
    while (acc != identity_) {
      acc = table_[acc][a];
      ++ord;
    }
    order_[a] = ord;
    exponent_ = std::lcm(exponent_, ord);
  }

  // Trivial length by default.
  length_.assign(n, 1.0);
  exact_length_.assign(n, Rational(1));
  length_[identity_] = 0.0;
  exact_length_[identity_] = Rational(0);
}

std::optional<TableGroup::Element> TableGroup::index_of(const std::string& name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void TableGroup::set_lengths(std::vector<Rational> lengths) {
  if (lengths.size() != size()) throw std::invalid_argument("length vector size mismatch");
  std::vector<double> numeric(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) numeric[i] = lengths[i].to_double();
  auto saved_len = length_;
  auto saved_exact = exact_length_;
  length_ = std::move(numeric);
  exact_length_.assign(lengths.begin(), lengths.end());
  auto report = check_length_axioms(*this);
  if (!report.ok()) {
    length_ = std::move(saved_len);
    exact_length_ = std::move(saved_exact);
    throw std::invalid_argument("length function violates invariance axioms: " + report.detail);
  }
}

void TableGroup::set_lengths_numeric(std::vector<double> lengths, double tol) {
  if (lengths.size() != size()) throw std::invalid_argument("length vector size mismatch");
  auto saved_len = length_;
  auto saved_exact = exact_length_;
  length_ = std::move(lengths);
  exact_length_.assign(size(), std::nullopt);
  auto report = check_length_axioms(*this, 4096, 2048, 1, tol);
  if (!report.ok()) {
    length_ = std::move(saved_len);
    exact_length_ = std::move(saved_exact);
    throw std::invalid_argument("length function violates invariance axioms: " + report.detail);
  }
}

TableGroup::Element TableGroup::power(Element a, std::uint64_t k) const {
  Element acc = identity_;
  Element base = a;
  while (k != 0) {
    if (k & 1u) acc = multiply(acc, base);
    k >>= 1;
    if (k != 0) base = multiply(base, base);
  }
  return acc;
}

TableGroup TableGroup::cyclic(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::string> names(m);
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::uint32_t i = 0; i < m; ++i) {
    names[i] = i == 0 ? "e" : "g" + std::to_string(i);
    for (std::uint32_t j = 0; j < m; ++j) table[i][j] = (i + j) % m;
  }
  return TableGroup(std::move(names), std::move(table));
}

TableGroup TableGroup::dihedral(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("dihedral group needs m >= 2");
  const std::uint32_t n = 2 * m;
  // Elements: r^i (i < m), then s r^i. (s r^i)(s r^j) = r^(i-j) etc.
  auto idx = [m](bool flip, std::uint32_t rot) { return (flip ? m : 0u) + rot; };
  std::vector<std::string> names(n);
  for (std::uint32_t i = 0; i < m; ++i) {
    names[i] = i == 0 ? "e" : "r" + std::to_string(i);
    names[m + i] = i == 0 ? "s" : "sr" + std::to_string(i);
  }
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    bool fa = a >= m;
    std::uint32_t ra = fa ? a - m : a;
    for (std::uint32_t b = 0; b < n; ++b) {
      bool fb = b >= m;
      std::uint32_t rb = fb ? b - m : b;
      // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb +/- ra)
      std::uint32_t rot = fb ? (rb + m - ra % m) % m : (ra + rb) % m;
      table[a][b] = idx(fa != fb, rot);
    }
  }
  return TableGroup(std::move(names), std::move(table));
}

TableGroup TableGroup::quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k} with ij = k, jk = i, ki = j.
  const std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto sign = [](std::uint32_t x) { return x & 1u; };
  auto axis = [](std::uint32_t x) { return x >> 1; };  // 0:1, 1:i, 2:j, 3:k
  auto pack = [](std::uint32_t ax, std::uint32_t sg) { return (ax << 1) | sg; };
  std::vector<std::vector<std::uint32_t>> table(8, std::vector<std::uint32_t>(8));
  // Axis multiplication table with result sign: 1*x = x, i*i = -1, i*j = k, j*i = -k, ...
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      std::uint32_t ax = axis_mul[axis(a)][axis(b)];
      std::uint32_t sg = (sign(a) + sign(b) + sign_mul[axis(a)][axis(b)]) & 1u;
      table[a][b] = pack(ax, sg);
    }
  return TableGroup(names, std::move(table));
}

TableGroup TableGroup::symmetric(std::uint32_t n, std::uint64_t cap) {
  auto perms = all_permutations(n, cap);
  const std::size_t m = perms.size();
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < m; ++i) index[perms[i].images()] = i;
  std::vector<std::string> names(m);
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  std::vector<Rational> lengths(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    names[i] = perms[i].str();
    lengths[i] = hamming_length(perms[i]);
    for (std::uint32_t j = 0; j < m; ++j) table[i][j] = index.at((perms[i] * perms[j]).images());
  }
  TableGroup g(std::move(names), std::move(table));
  g.set_lengths(std::move(lengths));
  return g;
}

TableGroup TableGroup::direct_product(const TableGroup& a, const TableGroup& b) {
  const std::uint64_t n = a.size(), m = b.size();
  std::vector<std::string> names(n * m);
  std::vector<std::vector<std::uint32_t>> table(n * m, std::vector<std::uint32_t>(n * m));
  auto idx = [m](std::uint64_t i, std::uint64_t j) {
    return static_cast<std::uint32_t>(i * m + j);
  };
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < m; ++j)
      names[idx(i, j)] = "(" + a.name(static_cast<std::uint32_t>(i)) + "," +
                         b.name(static_cast<std::uint32_t>(j)) + ")";
  for (std::uint64_t i0 = 0; i0 < n; ++i0)
    for (std::uint64_t j0 = 0; j0 < m; ++j0)
      for (std::uint64_t i1 = 0; i1 < n; ++i1)
        for (std::uint64_t j1 = 0; j1 < m; ++j1)
          table[idx(i0, j0)][idx(i1, j1)] =
              idx(a.multiply(static_cast<std::uint32_t>(i0), static_cast<std::uint32_t>(i1)),
                  b.multiply(static_cast<std::uint32_t>(j0), static_cast<std::uint32_t>(j1)));
  return TableGroup(std::move(names), std::move(table));
}

SymmetricGroup::SymmetricGroup(std::uint32_t degree) : degree_(degree) {
  if (degree == 0 || degree > 20)
    throw std::invalid_argument("symmetric group degree must be in [1,20]");
  factorial_ = 1;
  for (std::uint32_t i = 2; i <= degree; ++i) factorial_ *= i;
}

SymmetricGroup::Element SymmetricGroup::element_at(std::uint64_t index) const {
  if (index >= factorial_) throw std::out_of_range("permutation rank out of range");
  std::vector<std::uint32_t> pool(degree_);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<std::uint32_t> images(degree_);
  std::uint64_t rest = index;
  std::uint64_t block = factorial_;
  for (std::uint32_t pos = 0; pos < degree_; ++pos) {
    block /= (degree_ - pos);
    std::uint64_t digit = rest / block;
    rest %= block;
    images[pos] = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(images));
}

UnitarySubgroup UnitarySubgroup::generate(const std::vector<ComplexMatrix>& generators,
                                          LengthKind kind, std::uint64_t order_cap,
                                          double match_tol) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const Eigen::Index n = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("generator dimension mismatch");
    if (!is_unitary(g)) throw std::domain_error("generator is not unitary");
  }
  std::vector<ComplexMatrix> elems;
  elems.push_back(ComplexMatrix::Identity(n, n));
  auto find = [&](const ComplexMatrix& x) -> std::optional<std::uint32_t> {
    for (std::uint32_t i = 0; i < elems.size(); ++i)
      if (hs_norm(elems[i] - x) <= match_tol) return i;
    return std::nullopt;
  };
  // Closure under right multiplication by generators.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      ComplexMatrix prod = elems[head] * g;
      if (!find(prod)) {
        if (elems.size() >= order_cap)
          throw std::overflow_error("unitary subgroup closure exceeds order cap");
        elems.push_back(std::move(prod));
      }
    }
  }
  const std::uint32_t m = static_cast<std::uint32_t>(elems.size());
  std::vector<std::string> names(m);
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::uint32_t i = 0; i < m; ++i) {
    names[i] = "u" + std::to_string(i);
    for (std::uint32_t j = 0; j < m; ++j) {
      auto k = find(elems[i] * elems[j]);
      if (!k) throw std::logic_error("unitary subgroup closure is inconsistent");
      table[i][j] = *k;
    }
  }
  UnitarySubgroup out{TableGroup(std::move(names), std::move(table)), std::move(elems)};
  std::vector<double> lengths(m);
  for (std::uint32_t i = 0; i < m; ++i)
    lengths[i] = kind == LengthKind::HilbertSchmidt ? hs_length(out.reps[i])
                                                    : operator_norm_length(out.reps[i]);
  // Snap the identity to exactly zero; closure matching can leave dust.
  for (std::uint32_t i = 0; i < m; ++i)
    if (lengths[i] < 1e-12) lengths[i] = 0.0;
  out.table.set_lengths_numeric(std::move(lengths), 1e-9);
  return out;
}

}  // namespace soficlab
