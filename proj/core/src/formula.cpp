// Formula construction, ASCII parsing/rendering, and positional editing.
#include "nelab/formula.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace nelab {

std::string path_to_string(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

// --- Construction ----------------------------------------------------------

struct Formula::Node {
  Kind kind;
  std::string name;  // Var only
  std::optional<Formula> a, b;
  std::size_t hash = 0;
  int size = 1;
};

static std::size_t hash_combine(std::size_t h, std::size_t v) {
  // 64-bit splitmix-style mixing; good enough for structural hashing.
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Formula Formula::make(Kind k, std::string name, std::optional<Formula> a,
                      std::optional<Formula> b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  std::size_t h = static_cast<std::size_t>(k) * 0x100000001b3ULL;
  if (k == Kind::Var) {
    for (unsigned char c : n->name) h = hash_combine(h, c);
  }
  if (a) {
    h = hash_combine(h, a->hash());
    n->size += a->size();
    n->a = std::move(a);
  }
  if (b) {
    h = hash_combine(h, b->hash());
    n->size += b->size();
    n->b = std::move(b);
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::var(std::string name) {
  return make(Kind::Var, std::move(name), std::nullopt, std::nullopt);
}
Formula Formula::star(Formula a) {
  return make(Kind::Star, {}, std::move(a), std::nullopt);
}
Formula Formula::tensor(Formula a, Formula b) {
  return make(Kind::Tensor, {}, std::move(a), std::move(b));
}
Formula Formula::circ(Formula a, Formula b) {
  return make(Kind::Circ, {}, std::move(a), std::move(b));
}

Formula::Kind Formula::kind() const { return node_->kind; }
std::size_t Formula::hash() const { return node_->hash; }
int Formula::size() const { return node_->size; }
Formula Formula::imp(Formula a, Formula b) {
  return star(circ(std::move(a), star(std::move(b))));
}
Formula Formula::eqv(Formula a, Formula b) {
  return tensor(imp(a, b), imp(b, a));
}
Formula Formula::neq(Formula a, Formula b) {
  return star(eqv(std::move(a), std::move(b)));
}
Formula Formula::neq3(Formula a, Formula b, Formula c) {
  return tensor(tensor(neq(a, b), neq(a, c)), neq(b, c));
}
Formula Formula::oplus(Formula a, Formula b) {
  return star(tensor(star(std::move(a)), star(std::move(b))));
}
Formula Formula::hook(Formula a, Formula b) {
  return oplus(star(std::move(a)), std::move(b));
}

const std::string& Formula::var_name() const {
  assert(is_var());
  return node_->name;
}

int Formula::arity() const {
  switch (kind()) {
    case Kind::Var: return 0;
    case Kind::Star: return 1;
    default: return 2;
  }
}

const Formula& Formula::child(int i) const {
  assert(i >= 0 && i < arity());
  return (i == 0) ? *node_->a : *node_->b;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind ||
      node_->size != o.node_->size)
    return false;
  if (is_var()) return node_->name == o.node_->name;
  for (int i = 0; i < arity(); ++i)
    if (child(i) != o.child(i)) return false;
  return true;
}

bool Formula::operator<(const Formula& o) const {
  if (*this == o) return false;
  if (kind() != o.kind()) return kind() < o.kind();
  if (is_var()) return var_name() < o.var_name();
  for (int i = 0; i < arity(); ++i) {
    if (child(i) != o.child(i)) return child(i) < o.child(i);
  }
  return false;
}

// --- Lexer -----------------------------------------------------------------

namespace {

enum class Tok {
  LParen, RParen, Star, Amp, Circ, Imp, Eqv, Neq, Oplus, Hook, Ident, End
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Star: return "'*'";
    case Tok::Amp: return "'&'";
    case Tok::Circ: return "'o'";
    case Tok::Imp: return "'=>'";
    case Tok::Eqv: return "'<=>'";
    case Tok::Neq: return "'=/='";
    case Tok::Oplus: return "'(+)'";
    case Tok::Hook: return "'->'";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Lexer {
  std::string_view s;
  std::size_t i = 0;
  std::string error;

  std::optional<Token> next() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' ||
                            s[i] == '\r'))
      ++i;
    std::size_t p = i;
    if (i >= s.size()) return Token{Tok::End, p, ""};
    char c = s[i];
    if (c == '(') {
      if (i + 2 < s.size() && s[i + 1] == '+' && s[i + 2] == ')') {
        i += 3;
        return Token{Tok::Oplus, p, "(+)"};
      }
      ++i;
      return Token{Tok::LParen, p, "("};
    }
    if (c == ')') { ++i; return Token{Tok::RParen, p, ")"}; }
    if (c == '*') { ++i; return Token{Tok::Star, p, "*"}; }
    if (c == '&') { ++i; return Token{Tok::Amp, p, "&"}; }
    if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        i += 2;
        return Token{Tok::Hook, p, "->"};
      }
      return fail(p, "unknown token '-'");
    }
    if (c == '=') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        i += 2;
        return Token{Tok::Imp, p, "=>"};
      }
      if (i + 2 < s.size() && s[i + 1] == '/' && s[i + 2] == '=') {
        i += 3;
        return Token{Tok::Neq, p, "=/="};
      }
      return fail(p, "unknown token '='");
    }
    if (c == '<') {
      if (i + 2 < s.size() && s[i + 1] == '=' && s[i + 2] == '>') {
        i += 3;
        return Token{Tok::Eqv, p, "<=>"};
      }
      return fail(p, "unknown token '<'");
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') ||
                              (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
        ++j;
      std::string text(s.substr(i, j - i));
      i = j;
      if (text == "o") return Token{Tok::Circ, p, "o"};
      return Token{Tok::Ident, p, std::move(text)};
    }
    return fail(p, std::string("unknown token '") + c + "'");
  }

  std::optional<Token> fail(std::size_t p, std::string msg) {
    error = msg + " at offset " + std::to_string(p);
    return std::nullopt;
  }
};

// --- Parser ----------------------------------------------------------------

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;
  std::string error;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  std::optional<Formula> fail(const Token& t, const std::string& msg) {
    error = msg + " at offset " + std::to_string(t.pos);
    return std::nullopt;
  }

  static bool is_binop(Tok t) {
    switch (t) {
      case Tok::Amp: case Tok::Circ: case Tok::Imp: case Tok::Eqv:
      case Tok::Neq: case Tok::Oplus: case Tok::Hook:
        return true;
      default:
        return false;
    }
  }

  static Formula combine(Tok op, Formula a, Formula b) {
    switch (op) {
      case Tok::Amp: return Formula::tensor(std::move(a), std::move(b));
      case Tok::Circ: return Formula::circ(std::move(a), std::move(b));
      case Tok::Imp: return Formula::imp(std::move(a), std::move(b));
      case Tok::Eqv: return Formula::eqv(std::move(a), std::move(b));
      case Tok::Neq: return Formula::neq(std::move(a), std::move(b));
      case Tok::Oplus: return Formula::oplus(std::move(a), std::move(b));
      case Tok::Hook: return Formula::hook(std::move(a), std::move(b));
      default: assert(false); return a;
    }
  }

  std::optional<Formula> formula() {
    auto f = atom();
    if (!f) return std::nullopt;
    while (peek().kind == Tok::Star) {
      take();
      f = Formula::star(std::move(*f));
    }
    return f;
  }

  std::optional<Formula> atom() {
    const Token t = take();
    if (t.kind == Tok::Ident) return Formula::var(t.text);
    if (t.kind == Tok::Circ)
      return fail(t, "expected a formula; bare 'o' is the circ connective, "
                     "not a variable");
    if (t.kind == Tok::LParen) {
      auto a = formula();
      if (!a) return std::nullopt;
      if (peek().kind == Tok::RParen) {  // plain grouping
        take();
        return a;
      }
      const Token op = take();
      if (!is_binop(op.kind)) {
        if (op.kind == Tok::End)
          return fail(op, "unbalanced parentheses: missing ')'");
        return fail(op, std::string("expected a binary connective or ')', "
                                    "found ") + tok_name(op.kind));
      }
      auto b = formula();
      if (!b) return std::nullopt;
      const Token close = take();
      if (close.kind != Tok::RParen) {
        if (close.kind == Tok::End)
          return fail(close, "unbalanced parentheses: missing ')'");
        return fail(close, std::string("expected ')', found ") +
                               tok_name(close.kind) +
                               " (binary applications take exactly two "
                               "operands)");
      }
      return combine(op.kind, std::move(*a), std::move(*b));
    }
    if (t.kind == Tok::RParen)
      return fail(t, "unbalanced parentheses: unmatched ')'");
    return fail(t, std::string("expected a formula, found ") +
                       tok_name(t.kind));
  }
};

}  // namespace

Result<Formula> parse(std::string_view text) {
  Lexer lex{text, 0, {}};
  Parser p;
  for (;;) {
    auto tok = lex.next();
    if (!tok) return Result<Formula>::fail("syntax error: " + lex.error);
    bool end = tok->kind == Tok::End;
    p.toks.push_back(std::move(*tok));
    if (end) break;
  }
  auto f = p.formula();
  if (!f) return Result<Formula>::fail("syntax error: " + p.error);
  const Token& rest = p.peek();
  if (rest.kind != Tok::End) {
    if (rest.kind == Tok::RParen)
      return Result<Formula>::fail(
          "syntax error: unbalanced parentheses: unmatched ')' at offset " +
          std::to_string(rest.pos));
    if (Parser::is_binop(rest.kind))
      return Result<Formula>::fail(
          "syntax error: binary applications must be parenthesized; "
          "unexpected " + std::string(tok_name(rest.kind)) + " at offset " +
          std::to_string(rest.pos));
    return Result<Formula>::fail(
        "syntax error: unexpected " + std::string(tok_name(rest.kind)) +
        " at offset " + std::to_string(rest.pos));
  }
  return Result<Formula>::ok(std::move(*f));
}

// --- Rendering -------------------------------------------------------------

namespace {

// (a o b*)* with the matched operands, if f has implication shape.
bool match_imp(const Formula& f, const Formula** a, const Formula** b) {
  if (!f.is_star()) return false;
  const Formula& c = f.child(0);
  if (!c.is_circ() || !c.right().is_star()) return false;
  *a = &c.left();
  *b = &c.right().child(0);
  return true;
}

// ((a => b) & (b => a)) with the matched operands.
bool match_eqv(const Formula& f, const Formula** a, const Formula** b) {
  if (!f.is_tensor()) return false;
  const Formula *l1, *r1, *l2, *r2;
  if (!match_imp(f.left(), &l1, &r1) || !match_imp(f.right(), &l2, &r2))
    return false;
  if (*l1 != *r2 || *r1 != *l2) return false;
  *a = l1;
  *b = r1;
  return true;
}

// (a* & b*)* with the matched operands.
bool match_oplus(const Formula& f, const Formula** a, const Formula** b) {
  if (!f.is_star()) return false;
  const Formula& c = f.child(0);
  if (!c.is_tensor() || !c.left().is_star() || !c.right().is_star())
    return false;
  *a = &c.left().child(0);
  *b = &c.right().child(0);
  return true;
}

void render_to(const Formula& f, RenderStyle style, std::string& out) {
  if (style == RenderStyle::Sugared) {
    const Formula *a, *b;
    if (match_eqv(f, &a, &b)) {
      out += '(';
      render_to(*a, style, out);
      out += " <=> ";
      render_to(*b, style, out);
      out += ')';
      return;
    }
    if (match_imp(f, &a, &b)) {
      out += '(';
      render_to(*a, style, out);
      out += " => ";
      render_to(*b, style, out);
      out += ')';
      return;
    }
    // A star over an equivalence-shaped tensor is also oplus-shaped, but the
    // equivalence reading keeps strictly more of the tree sugared (e.g. the
    // expansion of =/= prints as "(x <=> y)*"), so it wins over oplus.
    if (f.is_star() && match_eqv(f.child(0), &a, &b)) {
      render_to(f.child(0), style, out);
      out += '*';
      return;
    }
    if (match_oplus(f, &a, &b)) {
      out += '(';
      render_to(*a, style, out);
      out += " (+) ";
      render_to(*b, style, out);
      out += ')';
      return;
    }
  }
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += f.var_name();
      return;
    case Formula::Kind::Star:
      render_to(f.child(0), style, out);
      out += '*';
      return;
    case Formula::Kind::Tensor:
    case Formula::Kind::Circ:
      out += '(';
      render_to(f.left(), style, out);
      out += f.is_tensor() ? " & " : " o ";
      render_to(f.right(), style, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string render(const Formula& f, RenderStyle style) {
  std::string out;
  out.reserve(static_cast<std::size_t>(f.size()) * 3);
  render_to(f, style, out);
  return out;
}

// --- Structural operations -------------------------------------------------

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sub) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = sub.find(f.var_name());
      return it == sub.end() ? f : it->second;
    }
    case Formula::Kind::Star:
      return Formula::star(substitute(f.child(0), sub));
    case Formula::Kind::Tensor:
      return Formula::tensor(substitute(f.left(), sub),
                             substitute(f.right(), sub));
    case Formula::Kind::Circ:
      return Formula::circ(substitute(f.left(), sub),
                           substitute(f.right(), sub));
  }
  return f;  // unreachable
}

std::optional<Formula> subterm_at(const Formula& f, const Path& p) {
  const Formula* cur = &f;
  for (int step : p) {
    if (step < 0 || step >= cur->arity()) return std::nullopt;
    cur = &cur->child(step);
  }
  return *cur;
}

namespace {

Formula rebuild(const Formula& f, const std::set<Path>& targets, Path& cur,
                const Formula& replacement) {
  if (targets.count(cur)) return replacement;
  switch (f.kind()) {
    case Formula::Kind::Var:
      return f;
    case Formula::Kind::Star: {
      cur.push_back(0);
      Formula a = rebuild(f.child(0), targets, cur, replacement);
      cur.pop_back();
      return Formula::star(std::move(a));
    }
    default: {
      cur.push_back(0);
      Formula a = rebuild(f.left(), targets, cur, replacement);
      cur.back() = 1;
      Formula b = rebuild(f.right(), targets, cur, replacement);
      cur.pop_back();
      return f.is_tensor() ? Formula::tensor(std::move(a), std::move(b))
                           : Formula::circ(std::move(a), std::move(b));
    }
  }
}

}  // namespace

Result<Formula> replace_at(const Formula& f, const std::vector<Path>& positions,
                           const Formula& replacement) {
  if (positions.empty())
    return Result<Formula>::fail("replace_at: no positions given");
  std::optional<Formula> first;
  std::set<Path> targets;
  for (const Path& p : positions) {
    auto sub = subterm_at(f, p);
    if (!sub)
      return Result<Formula>::fail("replace_at: invalid position " +
                                   path_to_string(p));
    if (!first) {
      first = *sub;
    } else if (*sub != *first) {
      return Result<Formula>::fail(
          "replace_at: subterms at addressed positions differ: '" +
          render(*first) + "' vs '" + render(*sub) + "' at " +
          path_to_string(p));
    }
    targets.insert(p);
  }
  Path cur;
  return Result<Formula>::ok(rebuild(f, targets, cur, replacement));
}

namespace {

void collect_occurrences(const Formula& f, const Formula& sub, Path& cur,
                         std::vector<Path>& out) {
  if (f == sub) out.push_back(cur);
  for (int i = 0; i < f.arity(); ++i) {
    cur.push_back(i);
    collect_occurrences(f.child(i), sub, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Path> occurrences(const Formula& f, const Formula& sub) {
  std::vector<Path> out;
  Path cur;
  collect_occurrences(f, sub, cur, out);
  return out;
}

Result<Formula> left_chain(const std::vector<Formula>& fs, Formula::Kind op) {
  if (fs.empty())
    return Result<Formula>::fail("left_chain: empty formula list");
  if (op != Formula::Kind::Tensor && op != Formula::Kind::Circ)
    return Result<Formula>::fail("left_chain: operator must be binary");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = (op == Formula::Kind::Tensor) ? Formula::tensor(acc, fs[i])
                                        : Formula::circ(acc, fs[i]);
  }
  return Result<Formula>::ok(std::move(acc));
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.is_var()) {
    out.insert(f.var_name());
    return;
  }
  for (int i = 0; i < f.arity(); ++i) collect_vars(f.child(i), out);
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return {s.begin(), s.end()};
}

}  // namespace nelab
