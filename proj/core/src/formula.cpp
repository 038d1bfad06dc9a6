#include "soficlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace soficlab::formula {

Ast Node::len(std::vector<NamedFactor> w) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Len;
  n->word = std::move(w);
  return n;
}
Ast Node::max_of(std::vector<Ast> xs) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Max;
  n->children = std::move(xs);
  return n;
}
Ast Node::min_of(std::vector<Ast> xs) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Min;
  n->children = std::move(xs);
  return n;
}
Ast Node::sum(Ast a, Ast b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Sum;
  n->children = {std::move(a), std::move(b)};
  return n;
}
Ast Node::diff(Ast a, Ast b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Diff;
  n->children = {std::move(a), std::move(b)};
  return n;
}
Ast Node::scale(Rational c, Ast a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Scale;
  n->coeff = c;
  n->children = {std::move(a)};
  return n;
}
Ast Node::abs(Ast a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Abs;
  n->children = {std::move(a)};
  return n;
}
Ast Node::clamp(Ast a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Clamp;
  n->children = {std::move(a)};
  return n;
}
Ast Node::constant(Rational c) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Const;
  n->coeff = c;
  return n;
}
Ast Node::sup(std::string var, Ast body) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Sup;
  n->var = std::move(var);
  n->children = {std::move(body)};
  return n;
}
Ast Node::inf(std::string var, Ast body) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Inf;
  n->var = std::move(var);
  n->children = {std::move(body)};
  return n;
}

bool structurally_equal(const Ast& a, const Ast& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->word != b->word || !(a->coeff == b->coeff) || a->var != b->var ||
      a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  return true;
}

namespace {

void collect_free(const Node* n, std::set<std::string>& bound, std::set<std::string>& out) {
  if (n->kind == NodeKind::Len) {
    for (const auto& f : n->word)
      if (!bound.contains(f.name)) out.insert(f.name);
    return;
  }
  if (n->kind == NodeKind::Sup || n->kind == NodeKind::Inf) {
    bool inserted = bound.insert(n->var).second;
    collect_free(n->children[0].get(), bound, out);
    if (inserted) bound.erase(n->var);
    return;
  }
  for (const auto& c : n->children) collect_free(c.get(), bound, out);
}

}  // namespace

std::set<std::string> free_variables(const Ast& ast) {
  std::set<std::string> bound, out;
  collect_free(ast.get(), bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Type { Ident, Number, LParen, RParen, Dot, Comma, Star, Plus, Minus, Caret, Slash, End };
  Type type = End;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int column = 1;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"sup", "inf", "len", "max", "min", "abs", "clamp"};
  return words;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.type = Token::End;
      return;
    }
    char c = text_[pos_];
    auto single = [&](Token::Type t) {
      current_.type = t;
      current_.text = std::string(1, c);
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '(': return single(Token::LParen);
      case ')': return single(Token::RParen);
      case '.': return single(Token::Dot);
      case ',': return single(Token::Comma);
      case '*': return single(Token::Star);
      case '+': return single(Token::Plus);
      case '-': return single(Token::Minus);
      case '^': return single(Token::Caret);
      case '/': return single(Token::Slash);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      current_.type = Token::Number;
      current_.text = text_.substr(start, pos_ - start);
      current_.value = std::stoll(current_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      current_.type = Token::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Ast parse() {
    Ast f = parse_formula();
    expect(Token::End, "end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().line, lex_.peek().column);
  }

  Token expect(Token::Type type, const char* what) {
    if (lex_.peek().type != type) fail(std::string("expected ") + what);
    return lex_.take();
  }

  bool peek_ident(const char* word) {
    return lex_.peek().type == Token::Ident && lex_.peek().text == word;
  }

  Ast parse_formula() {
    if (peek_ident("sup") || peek_ident("inf")) {
      bool is_sup = lex_.take().text == "sup";
      Token name = expect(Token::Ident, "identifier after quantifier");
      if (reserved_words().contains(name.text))
        throw ParseError("reserved word '" + name.text + "' used as a variable", name.line,
                         name.column);
      if (binders_.contains(name.text))
        throw ParseError("duplicate binder '" + name.text + "'", name.line, name.column);
      expect(Token::Dot, "'.' after quantified variable");
      binders_.insert(name.text);
      Ast body = parse_formula();
      binders_.erase(name.text);
      return is_sup ? Node::sup(name.text, std::move(body)) : Node::inf(name.text, std::move(body));
    }
    return parse_expr();
  }

  Ast parse_expr() {
    Ast a = parse_atom();
    while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
      bool plus = lex_.take().type == Token::Plus;
      Ast b = parse_atom();
      a = plus ? Node::sum(std::move(a), std::move(b)) : Node::diff(std::move(a), std::move(b));
    }
    return a;
  }

  // First operand of abs(... - ...): atoms joined by '+' only, so the '-'
  // separating the two operands stays unambiguous.
  Ast parse_abs_first() {
    Ast a = parse_atom();
    while (lex_.peek().type == Token::Plus) {
      lex_.take();
      a = Node::sum(std::move(a), parse_atom());
    }
    return a;
  }

  Ast parse_atom() {
    const Token& t = lex_.peek();
    if (t.type == Token::Ident) {
      if (t.text == "len") {
        lex_.take();
        expect(Token::LParen, "'(' after len");
        std::vector<NamedFactor> word = parse_word();
        expect(Token::RParen, "')' closing len");
        return Node::len(std::move(word));
      }
      if (t.text == "max" || t.text == "min") {
        bool is_max = lex_.take().text == "max";
        expect(Token::LParen, "'('");
        std::vector<Ast> args;
        args.push_back(parse_expr());
        while (lex_.peek().type == Token::Comma) {
          lex_.take();
          args.push_back(parse_expr());
        }
        expect(Token::RParen, "')'");
        return is_max ? Node::max_of(std::move(args)) : Node::min_of(std::move(args));
      }
      if (t.text == "abs") {
        lex_.take();
        expect(Token::LParen, "'(' after abs");
        Ast a = parse_abs_first();
        expect(Token::Minus, "'-' inside abs(x - y)");
        Ast b = parse_expr();
        expect(Token::RParen, "')' closing abs");
        return Node::abs(Node::diff(std::move(a), std::move(b)));
      }
      if (t.text == "clamp") {
        lex_.take();
        expect(Token::LParen, "'(' after clamp");
        Ast a = parse_expr();
        expect(Token::RParen, "')' closing clamp");
        return Node::clamp(std::move(a));
      }
      fail("unexpected identifier '" + t.text + "' (did you mean len(" + t.text + ")?)");
    }
    if (t.type == Token::Number) {
      Rational q = parse_rational();
      if (lex_.peek().type == Token::Star) {
        lex_.take();
        Ast child = parse_atom();
        return Node::scale(q, std::move(child));
      }
      return Node::constant(q);
    }
    if (t.type == Token::LParen) {
      lex_.take();
      Ast a = parse_expr();
      expect(Token::RParen, "')'");
      return a;
    }
    fail("expected expression");
  }

  Rational parse_rational() {
    Token num = expect(Token::Number, "number");
    if (lex_.peek().type == Token::Slash) {
      lex_.take();
      Token den = expect(Token::Number, "denominator");
      if (den.value == 0) throw ParseError("zero denominator", den.line, den.column);
      return Rational(num.value, den.value);
    }
    return Rational(num.value);
  }

  std::vector<NamedFactor> parse_word() {
    std::vector<NamedFactor> word;
    if (lex_.peek().type == Token::Number) {
      Token one = lex_.take();
      if (one.value != 1)
        throw ParseError("only '1' denotes the empty word", one.line, one.column);
      return word;
    }
    word.push_back(parse_factor());
    while (lex_.peek().type == Token::Star) {
      lex_.take();
      word.push_back(parse_factor());
    }
    return word;
  }

  NamedFactor parse_factor() {
    Token name = expect(Token::Ident, "identifier in word");
    if (reserved_words().contains(name.text))
      throw ParseError("reserved word '" + name.text + "' used in a word", name.line, name.column);
    NamedFactor f{name.text, 1};
    if (lex_.peek().type == Token::Caret) {
      lex_.take();
      bool neg = false;
      if (lex_.peek().type == Token::Minus) {
        lex_.take();
        neg = true;
      }
      Token e = expect(Token::Number, "exponent");
      f.exponent = neg ? -e.value : e.value;
    }
    return f;
  }

  Lexer lex_;
  std::set<std::string> binders_;
};

}  // namespace

Ast parse_formula(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

void print_node(const Node* n, std::ostream& os);

void print_wrapped_if(const Node* n, std::ostream& os, bool wrap) {
  if (wrap) os << "(";
  print_node(n, os);
  if (wrap) os << ")";
}

bool is_additive(const Node* n) {
  return n->kind == NodeKind::Sum || n->kind == NodeKind::Diff;
}

void print_word(const std::vector<NamedFactor>& word, std::ostream& os) {
  if (word.empty()) {
    os << "1";
    return;
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << "*";
    os << word[i].name;
    if (word[i].exponent != 1) os << "^" << word[i].exponent;
  }
}

void print_node(const Node* n, std::ostream& os) {
  switch (n->kind) {
    case NodeKind::Len:
      os << "len(";
      print_word(n->word, os);
      os << ")";
      return;
    case NodeKind::Max:
    case NodeKind::Min:
      os << (n->kind == NodeKind::Max ? "max(" : "min(");
      for (std::size_t i = 0; i < n->children.size(); ++i) {
        if (i) os << ", ";
        print_node(n->children[i].get(), os);
      }
      os << ")";
      return;
    case NodeKind::Sum:
      print_node(n->children[0].get(), os);
      os << " + ";
      print_wrapped_if(n->children[1].get(), os, is_additive(n->children[1].get()));
      return;
    case NodeKind::Diff:
      print_node(n->children[0].get(), os);
      os << " - ";
      print_wrapped_if(n->children[1].get(), os, is_additive(n->children[1].get()));
      return;
    case NodeKind::Scale:
      os << n->coeff.str() << " * ";
      print_wrapped_if(n->children[0].get(), os, is_additive(n->children[0].get()));
      return;
    case NodeKind::Abs: {
      const Node* child = n->children[0].get();
      os << "abs(";
      if (child->kind == NodeKind::Diff) {
        const Node* lhs = child->children[0].get();
        print_wrapped_if(lhs, os, lhs->kind == NodeKind::Diff);
        os << " - ";
        print_wrapped_if(child->children[1].get(), os, is_additive(child->children[1].get()));
      } else {
        // Only reachable on hand-built ASTs; abs(x) is encoded as abs(x - 0).
        print_node(child, os);
        os << " - 0";
      }
      os << ")";
      return;
    }
    case NodeKind::Clamp:
      os << "clamp(";
      print_node(n->children[0].get(), os);
      os << ")";
      return;
    case NodeKind::Const:
      os << n->coeff.str();
      return;
    case NodeKind::Sup:
    case NodeKind::Inf:
      os << (n->kind == NodeKind::Sup ? "sup " : "inf ") << n->var << " . ";
      print_node(n->children[0].get(), os);
      return;
  }
}

}  // namespace

std::string print_formula(const Ast& ast) {
  std::ostringstream os;
  print_node(ast.get(), os);
  return os.str();
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Exact: return "exact";
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::Mixed: return "mixed";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

namespace {

BoundKind negate_kind(BoundKind k) {
  switch (k) {
    case BoundKind::Lower: return BoundKind::Upper;
    case BoundKind::Upper: return BoundKind::Lower;
    default: return k;
  }
}

BoundKind join_kinds(BoundKind a, BoundKind b) {
  if (a == BoundKind::Exact) return b;
  if (b == BoundKind::Exact) return a;
  if (a == b) return a;
  return BoundKind::Mixed;
}

std::uint64_t mix3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = a ^ 0x9e3779b97f4a7c15ull;
  h = (h ^ b) * 0xbf58476d1ce4e5b9ull;
  h ^= h >> 29;
  h = (h ^ c) * 0x94d049bb133111ebull;
  h ^= h >> 32;
  return h;
}

struct DoubleOps {
  using S = double;
  static S from_rational(const Rational& r) { return r.to_double(); }
  static S add(S a, S b) { return a + b; }
  static S sub(S a, S b) { return a - b; }
  static S mul(const Rational& c, S v) { return c.to_double() * v; }
  static S abs(S v) { return std::fabs(v); }
  static S clamp01(S v) { return std::min(1.0, std::max(0.0, v)); }
  static bool less(S a, S b) { return a < b; }
  static double to_double(S v) { return v; }
};

struct RationalOps {
  using S = Rational;
  static S from_rational(const Rational& r) { return r; }
  static S add(const S& a, const S& b) { return a + b; }
  static S sub(const S& a, const S& b) { return a - b; }
  static S mul(const Rational& c, const S& v) { return c * v; }
  static S abs(const S& v) { return v.abs(); }
  static S clamp01(const S& v) { return min(Rational(1), max(Rational(0), v)); }
  static bool less(const S& a, const S& b) { return a < b; }
  static double to_double(const S& v) { return v.to_double(); }
};

// Length accessors: rational path requires exact lengths.
template <class G, class Ops>
struct LengthAccess;

template <>
struct LengthAccess<TableGroup, DoubleOps> {
  static double get(const TableGroup& g, TableGroup::Element e) { return g.length(e); }
};
template <>
struct LengthAccess<TableGroup, RationalOps> {
  static Rational get(const TableGroup& g, TableGroup::Element e) {
    const auto& r = g.exact_length(e);
    if (!r) throw std::logic_error("exact evaluation requested without exact lengths");
    return *r;
  }
};
template <>
struct LengthAccess<SymmetricGroup, DoubleOps> {
  static double get(const SymmetricGroup& g, const Permutation& e) { return g.length(e); }
};
template <>
struct LengthAccess<SymmetricGroup, RationalOps> {
  static Rational get(const SymmetricGroup&, const Permutation& e) { return hamming_length(e); }
};

template <class G, class Ops>
class Evaluator {
 public:
  using S = typename Ops::S;
  struct Out {
    S value;
    BoundKind kind;
  };

  Evaluator(const G& g, const Assignment<G>& assignment, const EvalOptions& opts)
      : g_(g), opts_(opts) {
    for (const auto& [k, v] : assignment) env_[k] = v;
  }

  Out run(const Node* root) {
    number_nodes(root);
    check_work(root);
    return eval(root, 0);
  }

 private:
  void number_nodes(const Node* n) {
    ids_.emplace(n, ids_.size());
    for (const auto& c : n->children) number_nodes(c.get());
  }

  // Upper bound on the number of leaf evaluations in exact mode.
  std::uint64_t work_of(const Node* n) const {
    constexpr std::uint64_t kSat = ~0ull;
    if (n->kind == NodeKind::Sup || n->kind == NodeKind::Inf) {
      std::uint64_t per = opts_.sampled ? opts_.samples : g_.size();
      std::uint64_t inner = work_of(n->children[0].get());
      if (inner != 0 && per > kSat / inner) return kSat;
      return per * inner;
    }
    std::uint64_t total = 1;
    for (const auto& c : n->children) {
      std::uint64_t w = work_of(c.get());
      total = (total > kSat - w) ? kSat : total + w;
    }
    return total;
  }

  void check_work(const Node* root) const {
    if (!opts_.sampled) {
      bool has_quant = false;
      for (const auto& [node, id] : ids_)
        if (node->kind == NodeKind::Sup || node->kind == NodeKind::Inf) has_quant = true;
      if (has_quant && g_.size() > opts_.enum_cap)
        throw std::overflow_error("exact quantifier enumeration exceeds per-quantifier cap (" +
                                  std::to_string(g_.size()) + " > " +
                                  std::to_string(opts_.enum_cap) + ")");
    }
    if (work_of(root) > opts_.work_cap)
      throw std::overflow_error("total evaluation work exceeds cap");
  }

  Out eval(const Node* n, std::uint64_t path) {
    switch (n->kind) {
      case NodeKind::Len: {
        typename G::Element acc = g_.identity();
        for (const NamedFactor& f : n->word) {
          auto it = env_.find(f.name);
          if (it == env_.end())
            throw std::invalid_argument("missing assignment for variable '" + f.name + "'");
          typename G::Element base = f.exponent < 0 ? g_.inverse(it->second) : it->second;
          std::uint64_t e = f.exponent < 0
                                ? static_cast<std::uint64_t>(-(f.exponent + 1)) + 1
                                : static_cast<std::uint64_t>(f.exponent);
          typename G::Element pw = g_.identity();
          typename G::Element sq = base;
          while (e != 0) {
            if (e & 1u) pw = g_.multiply(pw, sq);
            e >>= 1;
            if (e != 0) sq = g_.multiply(sq, sq);
          }
          acc = g_.multiply(acc, pw);
        }
        return {LengthAccess<G, Ops>::get(g_, acc), BoundKind::Exact};
      }
      case NodeKind::Const:
        return {Ops::from_rational(n->coeff), BoundKind::Exact};
      case NodeKind::Sum: {
        Out a = eval(n->children[0].get(), path);
        Out b = eval(n->children[1].get(), path);
        return {Ops::add(a.value, b.value), join_kinds(a.kind, b.kind)};
      }
      case NodeKind::Diff: {
        Out a = eval(n->children[0].get(), path);
        Out b = eval(n->children[1].get(), path);
        return {Ops::sub(a.value, b.value), join_kinds(a.kind, negate_kind(b.kind))};
      }
      case NodeKind::Scale: {
        Out a = eval(n->children[0].get(), path);
        return {Ops::mul(n->coeff, a.value), a.kind};
      }
      case NodeKind::Abs: {
        Out a = eval(n->children[0].get(), path);
        return {Ops::abs(a.value), a.kind == BoundKind::Exact ? BoundKind::Exact : BoundKind::Mixed};
      }
      case NodeKind::Clamp: {
        Out a = eval(n->children[0].get(), path);
        return {Ops::clamp01(a.value), a.kind};
      }
      case NodeKind::Max:
      case NodeKind::Min: {
        bool take_max = n->kind == NodeKind::Max;
        std::optional<Out> best;
        BoundKind kind = BoundKind::Exact;
        for (const auto& c : n->children) {
          Out o = eval(c.get(), path);
          kind = join_kinds(kind, o.kind);
          if (!best || (take_max ? Ops::less(best->value, o.value)
                                 : Ops::less(o.value, best->value)))
            best = o;
        }
        return {best->value, kind};
      }
      case NodeKind::Sup:
      case NodeKind::Inf:
        return quantifier(n, path);
    }
    throw std::logic_error("unreachable formula node kind");
  }

  Out quantifier(const Node* n, std::uint64_t path) {
    const bool is_sup = n->kind == NodeKind::Sup;
    const Node* body = n->children[0].get();
    auto saved = env_.find(n->var) != env_.end()
                     ? std::optional<typename G::Element>(env_[n->var])
                     : std::nullopt;
    std::optional<S> best;
    BoundKind body_kind = BoundKind::Exact;
    const std::uint64_t nid = ids_.at(n);
    const std::uint64_t count = opts_.sampled ? opts_.samples : g_.size();
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t child_path = mix3(path, nid, i);
      if (opts_.sampled) {
        Rng rng = Rng(opts_.seed).split(child_path);
        env_[n->var] = g_.sample(rng);
      } else {
        env_[n->var] = g_.element_at(i);
      }
      Out o = eval(body, child_path);
      body_kind = join_kinds(body_kind, o.kind);
      if (!best || (is_sup ? Ops::less(*best, o.value) : Ops::less(o.value, *best)))
        best = o.value;
    }
    if (saved)
      env_[n->var] = *saved;
    else
      env_.erase(n->var);
    BoundKind kind;
    if (!opts_.sampled) {
      kind = body_kind;
    } else if (is_sup) {
      kind = (body_kind == BoundKind::Exact || body_kind == BoundKind::Lower) ? BoundKind::Lower
                                                                              : BoundKind::Mixed;
    } else {
      kind = (body_kind == BoundKind::Exact || body_kind == BoundKind::Upper) ? BoundKind::Upper
                                                                              : BoundKind::Mixed;
    }
    return {*best, kind};
  }

  const G& g_;
  const EvalOptions& opts_;
  std::map<std::string, typename G::Element> env_;
  std::map<const Node*, std::uint64_t> ids_;
};

template <class G>
bool group_has_exact_lengths(const G& g);

template <>
bool group_has_exact_lengths<TableGroup>(const TableGroup& g) {
  for (std::uint64_t i = 0; i < g.size(); ++i)
    if (!g.exact_length(g.element_at(i))) return false;
  return true;
}
template <>
bool group_has_exact_lengths<SymmetricGroup>(const SymmetricGroup&) {
  return true;
}

template <class G>
EvalResult evaluate_impl(const Ast& ast, const G& group, const Assignment<G>& assignment,
                         const EvalOptions& opts) {
  if (!ast) throw std::invalid_argument("null formula");
  if (group_has_exact_lengths(group)) {
    try {
      Evaluator<G, RationalOps> ev(group, assignment, opts);
      auto out = ev.run(ast.get());
      return EvalResult{out.value.to_double(), out.value, out.kind};
    } catch (const RationalOverflow&) {
      // fall through to the double path below
    }
  }
  Evaluator<G, DoubleOps> ev(group, assignment, opts);
  auto out = ev.run(ast.get());
  return EvalResult{out.value, std::nullopt, out.kind};
}

}  // namespace

EvalResult evaluate(const Ast& ast, const TableGroup& group,
                    const Assignment<TableGroup>& assignment, const EvalOptions& opts) {
  return evaluate_impl(ast, group, assignment, opts);
}

EvalResult evaluate(const Ast& ast, const SymmetricGroup& group,
                    const Assignment<SymmetricGroup>& assignment, const EvalOptions& opts) {
  return evaluate_impl(ast, group, assignment, opts);
}

std::vector<SeriesRow> sentence_series(const Ast& ast, const std::vector<std::uint32_t>& degrees,
                                       const EvalOptions& opts) {
  if (!is_sentence(ast)) {
    auto fv = free_variables(ast);
    throw std::invalid_argument("sentence_series requires a sentence; free variable '" +
                                *fv.begin() + "'");
  }
  std::vector<SeriesRow> rows;
  std::optional<double> prev;
  for (std::uint32_t n : degrees) {
    SymmetricGroup g(n);
    SeriesRow row;
    row.degree = n;
    row.result = evaluate(ast, g, {}, opts);
    if (prev) row.delta = row.result.value - *prev;
    prev = row.result.value;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> sample_sentences() {
  return {
      {"commutator", "sup x . sup y . len(x*y*x^-1*y^-1)"},
      {"trivial-length", "sup x . min(abs(len(x) - 1), len(x))"},
      {"length-sup", "sup x . len(x)"},
      {"balanced-element", "inf x . max(len(x), 1 - len(x))"},
      {"commutant-size", "sup x . inf y . len(x*y*x^-1*y^-1)"},
      {"square-mean", "sup x . clamp(1/2 * len(x) + 1/2 * len(x*x))"},
      {"involution-gap", "inf x . max(abs(len(x) - 1), len(x*x))"},
      {"conjugation-symmetry", "sup x . sup y . abs(len(x*y) - len(y*x))"},
  };
}

}  // namespace soficlab::formula
