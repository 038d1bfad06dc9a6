#include "soficlab/group_model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace soficlab {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

// --------------------------------------------------------------------------
// LatticeModel
// --------------------------------------------------------------------------

LatticeModel::LatticeModel(std::uint32_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("lattice dimension must be positive");
}

GroupModel::Element LatticeModel::identity() const { return Element(dim_, 0); }

GroupModel::Element LatticeModel::multiply(const Element& a, const Element& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("lattice element size");
  Element out(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) out[i] = a[i] + b[i];
  return out;
}

GroupModel::Element LatticeModel::inverse(const Element& a) const {
  if (a.size() != dim_) throw std::invalid_argument("lattice element size");
  Element out(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) out[i] = -a[i];
  return out;
}

Tri LatticeModel::is_identity(const Element& a) const {
  if (a.size() != dim_) throw std::invalid_argument("lattice element size");
  for (auto v : a)
    if (v != 0) return Tri::False;
  return Tri::True;
}

std::string LatticeModel::describe(const Element& a) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  return os.str();
}

GroupModel::Element LatticeModel::parse_element(const std::string& text) const {
  auto parts = split(text, ',');
  if (parts.size() != dim_)
    throw std::invalid_argument("lattice element needs " + std::to_string(dim_) +
                                " coordinates: '" + text + "'");
  Element out;
  for (const auto& p : parts) out.push_back(std::stoll(strip(p)));
  return out;
}

std::vector<GroupModel::Element> LatticeModel::box(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) const {
  if (ranges.size() != dim_) throw std::invalid_argument("box rank mismatch");
  std::vector<Element> out;
  Element cur(dim_);
  std::uint64_t total = 1;
  for (auto& [lo, hi] : ranges) {
    if (hi <= lo) return {};
    total *= static_cast<std::uint64_t>(hi - lo);
    if (total > 50'000'000) throw std::overflow_error("box too large");
  }
  out.reserve(total);
  std::vector<std::int64_t> idx(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) idx[i] = ranges[i].first;
  for (;;) {
    out.push_back(idx);
    std::uint32_t d = dim_;
    while (d > 0) {
      --d;
      if (++idx[d] < ranges[d].second) break;
      idx[d] = ranges[d].first;
      if (d == 0) return out;
    }
  }
}

// --------------------------------------------------------------------------
// TableModel
// --------------------------------------------------------------------------

TableGroup::Element TableModel::index_of(const Element& a) const {
  if (a.size() != 1 || a[0] < 0 || static_cast<std::uint64_t>(a[0]) >= group_.size())
    throw std::invalid_argument("bad table model element");
  return static_cast<TableGroup::Element>(a[0]);
}

GroupModel::Element TableModel::multiply(const Element& a, const Element& b) const {
  return {group_.multiply(index_of(a), index_of(b))};
}

GroupModel::Element TableModel::inverse(const Element& a) const {
  return {group_.inverse(index_of(a))};
}

Tri TableModel::is_identity(const Element& a) const {
  return index_of(a) == group_.identity() ? Tri::True : Tri::False;
}

std::optional<Rational> TableModel::exact_length(const Element& a) const {
  return group_.exact_length(index_of(a));
}

std::string TableModel::describe(const Element& a) const { return group_.name(index_of(a)); }

GroupModel::Element TableModel::parse_element(const std::string& text) const {
  auto idx = group_.index_of(strip(text));
  if (!idx) throw std::invalid_argument("unknown table element '" + text + "'");
  return {*idx};
}

std::vector<GroupModel::Element> TableModel::all_elements() const {
  std::vector<Element> out;
  out.reserve(group_.size());
  for (std::uint64_t i = 0; i < group_.size(); ++i)
    out.push_back({static_cast<std::int64_t>(i)});
  return out;
}

// --------------------------------------------------------------------------
// PairModel
// --------------------------------------------------------------------------

PairModel::PairModel(std::shared_ptr<const GroupModel> first,
                     std::shared_ptr<const GroupModel> second)
    : first_(std::move(first)), second_(std::move(second)) {
  auto s1 = first_->element_size();
  auto s2 = second_->element_size();
  if (!s1 || !s2)
    throw std::invalid_argument("pair model requires fixed-width component models");
  split_ = *s1;
  second_size_ = *s2;
}

GroupModel::Element PairModel::pack(const Element& a, const Element& b) const {
  Element out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::pair<GroupModel::Element, GroupModel::Element> PairModel::unpack(const Element& e) const {
  if (e.size() != split_ + second_size_) throw std::invalid_argument("bad pair element");
  return {Element(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(split_)),
          Element(e.begin() + static_cast<std::ptrdiff_t>(split_), e.end())};
}

GroupModel::Element PairModel::identity() const {
  return pack(first_->identity(), second_->identity());
}

GroupModel::Element PairModel::multiply(const Element& a, const Element& b) const {
  auto [a1, a2] = unpack(a);
  auto [b1, b2] = unpack(b);
  return pack(first_->multiply(a1, b1), second_->multiply(a2, b2));
}

GroupModel::Element PairModel::inverse(const Element& a) const {
  auto [a1, a2] = unpack(a);
  return pack(first_->inverse(a1), second_->inverse(a2));
}

Tri PairModel::is_identity(const Element& a) const {
  auto [a1, a2] = unpack(a);
  Tri t1 = first_->is_identity(a1);
  Tri t2 = second_->is_identity(a2);
  if (t1 == Tri::False || t2 == Tri::False) return Tri::False;
  if (t1 == Tri::True && t2 == Tri::True) return Tri::True;
  return Tri::Unknown;
}

std::string PairModel::describe(const Element& a) const {
  auto [a1, a2] = unpack(a);
  return first_->describe(a1) + "|" + second_->describe(a2);
}

GroupModel::Element PairModel::parse_element(const std::string& text) const {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("pair element must be '<first>|<second>'");
  return pack(first_->parse_element(text.substr(0, bar)),
              second_->parse_element(text.substr(bar + 1)));
}

// --------------------------------------------------------------------------
// FreeProductModel
// --------------------------------------------------------------------------

FreeProductModel::FreeProductModel(TableGroup factor0, TableGroup factor1)
    : factor0_(std::move(factor0)), factor1_(std::move(factor1)) {}

GroupModel::Element FreeProductModel::normalize(const Element& raw) const {
  if (raw.size() % 2 != 0) throw std::invalid_argument("bad free product word");
  std::vector<std::pair<int, std::uint32_t>> stack;
  for (std::size_t i = 0; i < raw.size(); i += 2) {
    int f = static_cast<int>(raw[i]);
    if (f != 0 && f != 1) throw std::invalid_argument("bad free product factor tag");
    const TableGroup& g = f == 0 ? factor0_ : factor1_;
    auto v = static_cast<TableGroup::Element>(raw[i + 1]);
    if (v >= g.size()) throw std::invalid_argument("bad free product syllable");
    std::pair<int, std::uint32_t> syl{f, v};
    for (;;) {
      if (syl.second == g.identity()) break;  // drop identity syllables
      if (!stack.empty() && stack.back().first == f) {
        syl.second = g.multiply(stack.back().second, syl.second);
        stack.pop_back();
        continue;
      }
      stack.push_back(syl);
      break;
    }
  }
  Element out;
  out.reserve(2 * stack.size());
  for (auto& [f, v] : stack) {
    out.push_back(f);
    out.push_back(v);
  }
  return out;
}

GroupModel::Element FreeProductModel::from_syllables(
    const std::vector<std::pair<int, std::uint32_t>>& syllables) const {
  Element raw;
  for (auto& [f, v] : syllables) {
    raw.push_back(f);
    raw.push_back(v);
  }
  return normalize(raw);
}

std::vector<GroupModel::Element> FreeProductModel::words_up_to(std::size_t max_syllables) const {
  std::vector<Element> out;
  out.push_back({});
  std::vector<Element> frontier = {{}};
  for (std::size_t len = 1; len <= max_syllables; ++len) {
    std::vector<Element> next;
    for (const auto& w : frontier) {
      int last = w.empty() ? -1 : static_cast<int>(w[w.size() - 2]);
      for (int f = 0; f <= 1; ++f) {
        if (f == last) continue;
        const TableGroup& g = f == 0 ? factor0_ : factor1_;
        for (std::uint32_t v = 0; v < g.size(); ++v) {
          if (v == g.identity()) continue;
          Element w2 = w;
          w2.push_back(f);
          w2.push_back(v);
          next.push_back(std::move(w2));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

GroupModel::Element FreeProductModel::multiply(const Element& a, const Element& b) const {
  Element raw = a;
  raw.insert(raw.end(), b.begin(), b.end());
  return normalize(raw);
}

GroupModel::Element FreeProductModel::inverse(const Element& a) const {
  Element out;
  out.reserve(a.size());
  for (std::size_t i = a.size(); i >= 2; i -= 2) {
    int f = static_cast<int>(a[i - 2]);
    const TableGroup& g = f == 0 ? factor0_ : factor1_;
    out.push_back(f);
    out.push_back(g.inverse(static_cast<TableGroup::Element>(a[i - 1])));
  }
  return out;
}

Tri FreeProductModel::is_identity(const Element& a) const {
  return a.empty() ? Tri::True : Tri::False;
}

std::string FreeProductModel::describe(const Element& a) const {
  if (a.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); i += 2) {
    if (i) os << "*";
    int f = static_cast<int>(a[i]);
    const TableGroup& g = f == 0 ? factor0_ : factor1_;
    os << f << ":" << g.name(static_cast<TableGroup::Element>(a[i + 1]));
  }
  return os.str();
}

GroupModel::Element FreeProductModel::parse_element(const std::string& text) const {
  std::string t = strip(text);
  if (t == "1" || t.empty()) return {};
  Element raw;
  for (const auto& part : split(t, '*')) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("free product syllable must be '<factor>:<name>'");
    int f = std::stoi(strip(part.substr(0, colon)));
    if (f != 0 && f != 1) throw std::invalid_argument("factor tag must be 0 or 1");
    const TableGroup& g = f == 0 ? factor0_ : factor1_;
    auto idx = g.index_of(strip(part.substr(colon + 1)));
    if (!idx) throw std::invalid_argument("unknown element in factor " + std::to_string(f));
    raw.push_back(f);
    raw.push_back(*idx);
  }
  return normalize(raw);
}

// --------------------------------------------------------------------------
// PresentationModel
// --------------------------------------------------------------------------

PresentationModel::PresentationModel(std::vector<std::string> generators,
                                     std::vector<Word> relators, std::size_t max_rewrite_steps)
    : generators_(std::move(generators)),
      relators_(std::move(relators)),
      max_rewrite_steps_(max_rewrite_steps) {
  if (generators_.empty()) throw std::invalid_argument("presentation needs generators");
  for (auto& r : relators_) {
    r = free_reduce(r);
    for (const auto& f : r)
      if (f.index >= generators_.size())
        throw std::invalid_argument("relator uses unknown generator");
  }
  // Expand relators into letter strings, take inverses and cyclic rotations.
  auto to_letters = [](const Word& w) {
    std::vector<std::int64_t> out;
    for (const auto& f : w) {
      std::int64_t letter = static_cast<std::int64_t>(f.index) + 1;
      std::int64_t count = f.exponent < 0 ? -f.exponent : f.exponent;
      for (std::int64_t i = 0; i < count; ++i) out.push_back(f.exponent < 0 ? -letter : letter);
    }
    return out;
  };
  for (const auto& r : relators_) {
    std::vector<std::int64_t> base = to_letters(r);
    if (base.empty()) continue;
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<std::int64_t> v = base;
      if (dir == 1) {
        std::reverse(v.begin(), v.end());
        for (auto& x : v) x = -x;
      }
      for (std::size_t rot = 0; rot < v.size(); ++rot) {
        std::vector<std::int64_t> rotated(v.begin() + static_cast<std::ptrdiff_t>(rot), v.end());
        rotated.insert(rotated.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rot));
        // Only freely reduced variants are usable as rewriting patterns.
        bool reduced = true;
        for (std::size_t i = 0; i + 1 < rotated.size(); ++i)
          if (rotated[i] == -rotated[i + 1]) reduced = false;
        if (reduced) relator_variants_.push_back(std::move(rotated));
      }
    }
  }
  std::sort(relator_variants_.begin(), relator_variants_.end());
  relator_variants_.erase(std::unique(relator_variants_.begin(), relator_variants_.end()),
                          relator_variants_.end());
}

std::vector<std::int64_t> PresentationModel::reduce_free(std::vector<std::int64_t> letters) const {
  std::vector<std::int64_t> out;
  for (auto x : letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

GroupModel::Element PresentationModel::from_word(const Word& w) const {
  std::vector<std::int64_t> letters;
  for (const auto& f : w) {
    if (f.index >= generators_.size()) throw std::invalid_argument("unknown generator index");
    std::int64_t letter = static_cast<std::int64_t>(f.index) + 1;
    std::int64_t count = f.exponent < 0 ? -f.exponent : f.exponent;
    for (std::int64_t i = 0; i < count; ++i) letters.push_back(f.exponent < 0 ? -letter : letter);
  }
  return reduce_free(std::move(letters));
}

Word PresentationModel::to_word(const Element& e) const {
  Word w;
  for (auto x : e)
    w.push_back({static_cast<std::uint32_t>((x < 0 ? -x : x) - 1),
                 x < 0 ? std::int64_t{-1} : std::int64_t{1}});
  return free_reduce(w);
}

GroupModel::Element PresentationModel::multiply(const Element& a, const Element& b) const {
  std::vector<std::int64_t> cat = a;
  cat.insert(cat.end(), b.begin(), b.end());
  return reduce_free(std::move(cat));
}

GroupModel::Element PresentationModel::inverse(const Element& a) const {
  Element out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
  return out;
}

Tri PresentationModel::is_identity(const Element& a) const {
  std::vector<std::int64_t> w = reduce_free(a);
  if (w.empty()) return Tri::True;
  if (relator_variants_.empty()) return Tri::False;  // free group: exact
  // Dehn-style greedy shortening: replace a majority piece of a relator by
  // the inverse of the complementary piece.
  for (std::size_t step = 0; step < max_rewrite_steps_; ++step) {
    if (w.empty()) return Tri::True;
    bool rewrote = false;
    for (const auto& rel : relator_variants_) {
      std::size_t piece = rel.size() / 2 + 1;  // strictly more than half
      if (piece > rel.size() || w.size() < piece) continue;
      for (std::size_t start = 0; start + piece <= w.size() && !rewrote; ++start) {
        if (!std::equal(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(piece),
                        w.begin() + static_cast<std::ptrdiff_t>(start)))
          continue;
        // w = u * p * v with p the piece; replace p by inverse(q) where
        // rel = p * q, so p = q^-1 in the group and the word shortens.
        std::vector<std::int64_t> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
        for (std::size_t i = rel.size(); i > piece; --i) next.push_back(-rel[i - 1]);
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(start + piece), w.end());
        w = reduce_free(std::move(next));
        rewrote = true;
      }
      if (rewrote) break;
    }
    if (!rewrote) break;
  }
  if (w.empty()) return Tri::True;
  return Tri::Unknown;
}

std::string PresentationModel::describe(const Element& a) const {
  if (a.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << "*";
    std::int64_t x = a[i];
    os << generators_[static_cast<std::size_t>((x < 0 ? -x : x) - 1)];
    if (x < 0) os << "^-1";
  }
  return os.str();
}

GroupModel::Element PresentationModel::parse_element(const std::string& text) const {
  std::string t = strip(text);
  if (t == "1" || t.empty()) return {};
  Word w;
  for (const auto& part : split(t, '*')) {
    std::string p = strip(part);
    std::int64_t exp = 1;
    auto caret = p.find('^');
    std::string name = p;
    if (caret != std::string::npos) {
      name = strip(p.substr(0, caret));
      exp = std::stoll(strip(p.substr(caret + 1)));
    }
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end())
      throw std::invalid_argument("unknown generator '" + name + "'");
    w.push_back({static_cast<std::uint32_t>(it - generators_.begin()), exp});
  }
  return from_word(w);
}

}  // namespace soficlab
