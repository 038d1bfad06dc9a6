#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "soficlab/length_group.hpp"
#include "soficlab/rational.hpp"
#include "soficlab/rng.hpp"

namespace soficlab::formula {

enum class NodeKind { Len, Max, Min, Sum, Diff, Scale, Abs, Clamp, Const, Sup, Inf };

/// A word factor at the surface level: a name (variable or parameter) and an
/// integer exponent.
struct NamedFactor {
  std::string name;
  std::int64_t exponent = 1;

  bool operator==(const NamedFactor&) const = default;
};

struct Node;
using Ast = std::shared_ptr<const Node>;

/// Immutable AST node of the logic for invariant length groups.
struct Node {
  NodeKind kind;
  std::vector<NamedFactor> word;  // Len
  Rational coeff;                 // Scale, Const
  std::string var;                // Sup, Inf
  std::vector<Ast> children;

  static Ast len(std::vector<NamedFactor> w);
  static Ast max_of(std::vector<Ast> xs);
  static Ast min_of(std::vector<Ast> xs);
  static Ast sum(Ast a, Ast b);
  static Ast diff(Ast a, Ast b);
  static Ast scale(Rational c, Ast a);
  static Ast abs(Ast a);
  static Ast clamp(Ast a);
  static Ast constant(Rational c);
  static Ast sup(std::string var, Ast body);
  static Ast inf(std::string var, Ast body);
};

bool structurally_equal(const Ast& a, const Ast& b);

/// Free variables (names appearing in Len words and not bound by an
/// enclosing sup/inf).
std::set<std::string> free_variables(const Ast& ast);

inline bool is_sentence(const Ast& ast) { return free_variables(ast).empty(); }

/// Thrown by the parser with position information already baked into what().
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                           std::to_string(col_)),
        line(line_),
        column(col_) {}
};

/// Parses the surface syntax:
///   formula := ("sup"|"inf") ident "." formula | expr
///   expr    := atom { ("+"|"-") atom }
///   atom    := "len" "(" word ")" | "max(" expr{"," expr} ")"
///            | "min(" expr{"," expr} ")" | "abs(" sum+ "-" expr ")"
///            | "clamp(" expr ")" | rational ["*" atom] | "(" expr ")"
///   word    := "1" | factor {"*" factor};  factor := ident ["^" signed-int]
/// Rejects duplicate binders and reserved words used as identifiers.
/// `parameters` names are allowed to occur free without counting as free
/// variables of a sentence (they must then be supplied at evaluation time).
Ast parse_formula(const std::string& text);

/// Canonical printer; parse_formula(print(ast)) reproduces the AST
/// structurally for every parser-produced AST.
std::string print_formula(const Ast& ast);

enum class BoundKind { Exact, Lower, Upper, Mixed };

std::string to_string(BoundKind k);

struct EvalResult {
  double value = 0.0;
  std::optional<Rational> exact;  // set when the whole evaluation stayed rational
  BoundKind bound = BoundKind::Exact;
};

struct EvalOptions {
  bool sampled = false;
  std::uint64_t samples = 256;   // per quantifier, sampled mode
  std::uint64_t seed = 0;        // sampled mode
  std::uint64_t enum_cap = 5040; // per-quantifier cap, exact mode
  std::uint64_t work_cap = 100'000'000;  // total quantifier assignments, exact mode
};

/// Assignment for free variables (and parameters) by name.
template <class G>
using Assignment = std::map<std::string, typename G::Element>;

/// Evaluates a formula in a finite invariant length group. Exact mode
/// enumerates every quantifier assignment; sampled mode draws seeded uniform
/// elements and reports the resulting bound kind instead of pretending
/// exactness. Throws on missing assignments or blown caps.
EvalResult evaluate(const Ast& ast, const TableGroup& group,
                    const Assignment<TableGroup>& assignment, const EvalOptions& opts = {});
EvalResult evaluate(const Ast& ast, const SymmetricGroup& group,
                    const Assignment<SymmetricGroup>& assignment, const EvalOptions& opts = {});

struct SeriesRow {
  std::uint32_t degree = 0;
  EvalResult result;
  std::optional<double> delta;  // value minus the previous row's value
};

/// Evaluates a sentence along the symmetric groups S_n for the listed degrees.
std::vector<SeriesRow> sentence_series(const Ast& ast, const std::vector<std::uint32_t>& degrees,
                                       const EvalOptions& opts = {});

/// The corpus of sentences bundled with the library (used by tests and the
/// CLI's demo mode); all are sentences over the plain group language.
std::vector<std::pair<std::string, std::string>> sample_sentences();

}  // namespace soficlab::formula
