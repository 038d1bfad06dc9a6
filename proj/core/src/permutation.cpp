#include "soficlab/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace soficlab {

namespace {

std::vector<std::uint32_t> identity_images(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

}  // namespace

std::vector<std::uint32_t> Rng::shuffled_identity(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i) {
    std::uint32_t j = static_cast<std::uint32_t>(next_below(i));
    std::swap(v[i - 1], v[j]);
  }
  return v;
}

double Rng::next_gauss() {
  // Box-Muller; u1 bounded away from zero so the log is finite.
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

Permutation Permutation::identity(std::uint32_t n) {
  Permutation p;
  p.images_ = identity_images(n);
  return p;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw std::invalid_argument("permutation images are not a bijection of {0..n-1}");
    seen[img] = true;
  }
}

Permutation Permutation::transposition(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  if (a >= n || b >= n || a == b)
    throw std::invalid_argument("invalid transposition points");
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::full_cycle(std::uint32_t n) {
  Permutation p;
  p.images_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) p.images_[i] = (i + 1) % n;
  return p;
}

Permutation Permutation::from_cycle(std::uint32_t n, const std::vector<std::uint32_t>& cycle) {
  Permutation p = identity(n);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    std::uint32_t from = cycle[i];
    std::uint32_t to = cycle[(i + 1) % cycle.size()];
    if (from >= n) throw std::invalid_argument("cycle point out of range");
    p.images_[from] = to;
  }
  return Permutation(std::move(p.images_));  // revalidate
}

Permutation Permutation::random(std::uint32_t n, Rng& rng) {
  Permutation p;
  p.images_ = rng.shuffled_identity(n);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("composing permutations of different degrees");
  Permutation r;
  r.images_.resize(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) r.images_[i] = images_[other.images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::power(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation acc = identity(degree());
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

std::uint64_t Permutation::count_fixed_points() const {
  std::uint64_t c = 0;
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] == i) ++c;
  return c;
}

std::uint64_t Permutation::cycle_count() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t cycles = 0;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
    }
  }
  return cycles;
}

std::vector<std::uint32_t> Permutation::cycle_type() const {
  std::vector<bool> seen(degree(), false);
  std::vector<std::uint32_t> type;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    if (len >= 2) type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (std::uint32_t len : cycle_type()) ord = std::lcm<std::uint64_t>(ord, len);
  return ord;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << "perm " << degree() << ":";
  for (std::uint32_t img : images_) os << " " << img;
  return os.str();
}

Rational hamming_length(const Permutation& p) {
  if (p.degree() == 0) throw std::invalid_argument("hamming length of empty permutation");
  return Rational(static_cast<std::int64_t>(p.count_moved_points()),
                  static_cast<std::int64_t>(p.degree()));
}

Rational hamming_distance(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree())
    throw std::invalid_argument("hamming distance of mismatched degrees");
  std::uint64_t diff = 0;
  for (std::uint32_t i = 0; i < s.degree(); ++i)
    if (s(i) != t(i)) ++diff;
  return Rational(static_cast<std::int64_t>(diff), static_cast<std::int64_t>(s.degree()));
}

Permutation tensor_power_perm(const Permutation& p, unsigned k, std::uint64_t degree_cap) {
  if (k == 0) throw std::invalid_argument("tensor power requires k >= 1");
  const std::uint64_t n = p.degree();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n != 0 && total > degree_cap / n)
      throw std::overflow_error("tensor power degree exceeds cap");
    total *= n;
  }
  // Big-endian mixed radix: index = i_1 * n^(k-1) + ... + i_k.
  std::vector<std::uint32_t> images(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t out = 0;
    std::uint64_t place = total / n;
    for (unsigned pos = 0; pos < k; ++pos) {
      std::uint64_t digit = rest / place;
      rest %= place;
      out = out * n + p(static_cast<std::uint32_t>(digit));
      place = pos + 1 < k ? place / n : 1;
    }
    images[idx] = static_cast<std::uint32_t>(out);
  }
  return Permutation(std::move(images));
}

Permutation direct_tensor(const Permutation& s0, const Permutation& s1,
                          std::uint64_t degree_cap) {
  const std::uint64_t n = s0.degree(), m = s1.degree();
  if (m != 0 && n > degree_cap / m)
    throw std::overflow_error("direct tensor degree exceeds cap");
  std::vector<std::uint32_t> images(n * m);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      images[static_cast<std::uint64_t>(i) * m + j] =
          static_cast<std::uint32_t>(static_cast<std::uint64_t>(s0(i)) * m + s1(j));
  return Permutation(std::move(images));
}

Permutation block_embed(const Permutation& p, std::uint32_t N) {
  const std::uint32_t n = p.degree();
  if (N <= n) throw std::invalid_argument("block embedding requires N > n");
  const std::uint32_t k = N / n;
  std::vector<std::uint32_t> images(N);
  for (std::uint32_t block = 0; block < k; ++block)
    for (std::uint32_t j = 0; j < n; ++j) images[block * n + j] = block * n + p(j);
  for (std::uint32_t i = k * n; i < N; ++i) images[i] = i;
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::uint32_t n, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    count *= i;
    if (count > cap) throw std::overflow_error("S_n enumeration exceeds cap");
  }
  std::vector<Permutation> out;
  out.reserve(count);
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace soficlab
