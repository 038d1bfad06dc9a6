#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace soficlab {

/// One factor of a word: the index of a letter and an integer exponent.
struct WordFactor {
  std::uint32_t index;
  std::int64_t exponent;

  bool operator==(const WordFactor&) const = default;
};

/// A word in abstract letters x_0, x_1, ...; the empty word is the identity.
using Word = std::vector<WordFactor>;

/// Evaluates a word left-to-right under the composition convention
/// (s*t)(i) = s(t(i)). `assignment[i]` is the element substituted for letter i.
template <class G>
typename G::Element evaluate_word(const G& g, const Word& word,
                                  const std::vector<typename G::Element>& assignment) {
  typename G::Element acc = g.identity();
  for (const WordFactor& f : word) {
    if (f.index >= assignment.size())
      throw std::out_of_range("word letter index has no assigned element");
    typename G::Element base =
        f.exponent < 0 ? g.inverse(assignment[f.index]) : assignment[f.index];
    std::uint64_t e = f.exponent < 0 ? static_cast<std::uint64_t>(-(f.exponent + 1)) + 1
                                     : static_cast<std::uint64_t>(f.exponent);
    typename G::Element pw = g.identity();
    typename G::Element sq = base;
    while (e != 0) {
      if (e & 1u) pw = g.multiply(pw, sq);
      e >>= 1;
      if (e != 0) sq = g.multiply(sq, sq);
    }
    acc = g.multiply(acc, pw);
  }
  return acc;
}

/// Free reduction: merges adjacent factors with the same letter and drops
/// zero exponents. Words over a free alphabet are equal iff their reductions are.
inline Word free_reduce(const Word& w) {
  Word out;
  for (const WordFactor& f : w) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().index == f.index) {
      out.back().exponent += f.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  // Merging can expose new adjacent pairs; iterate to a fixed point.
  if (out.size() < w.size()) {
    bool changed = true;
    while (changed) {
      changed = false;
      Word next;
      for (const WordFactor& f : out) {
        if (!next.empty() && next.back().index == f.index) {
          next.back().exponent += f.exponent;
          if (next.back().exponent == 0) next.pop_back();
          changed = true;
        } else {
          next.push_back(f);
        }
      }
      out = std::move(next);
    }
  }
  return out;
}

/// Inverse word: reversed order, negated exponents.
inline Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->index, -it->exponent});
  return out;
}

}  // namespace soficlab
