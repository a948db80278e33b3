// Formula ASTs over the connective family {tensor &, circ o, postfix star},
// with the derived connectives =>, <=>, =/=, (+), -> expanded at construction
// time, an ASCII parser/renderer pair, substitution, and positional editing.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nelab/common.hpp"

namespace nelab {

// A position in a formula tree: the sequence of child indices from the root
// (0 = left or only child, 1 = right child). The empty path is the root.
using Path = std::vector<int>;

std::string path_to_string(const Path& p);

class Formula {
 public:
  enum class Kind : std::uint8_t { Var, Star, Tensor, Circ };

  // Primitive constructors.
  static Formula var(std::string name);
  static Formula star(Formula a);
  static Formula tensor(Formula a, Formula b);
  static Formula circ(Formula a, Formula b);

  // Derived connectives, expanded immediately; no derived node kinds exist.
  static Formula imp(Formula a, Formula b);    // (a o b*)*
  static Formula eqv(Formula a, Formula b);    // ((a => b) & (b => a))
  static Formula neq(Formula a, Formula b);    // (a <=> b)*
  static Formula neq3(Formula a, Formula b, Formula c);
  static Formula oplus(Formula a, Formula b);  // (a* & b*)*
  static Formula hook(Formula a, Formula b);   // (a* (+) b)

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_star() const { return kind() == Kind::Star; }
  bool is_tensor() const { return kind() == Kind::Tensor; }
  bool is_circ() const { return kind() == Kind::Circ; }

  const std::string& var_name() const;   // Var nodes only
  int arity() const;                     // 0, 1 or 2
  const Formula& child(int i) const;     // i < arity()
  const Formula& left() const { return child(0); }
  const Formula& right() const { return child(1); }

  std::size_t hash() const;
  int size() const;  // node count

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
  // Total structural order, usable for std::map / std::set keys.
  bool operator<(const Formula& o) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, std::optional<Formula> a,
                      std::optional<Formula> b);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// --- Parsing and rendering -------------------------------------------------
//
// Grammar (ASCII): variables are [a-z][a-z0-9_]* except the bare word "o",
// which is the circ connective. '*' is postfix and binds tightest. Every
// binary application is fully parenthesized: (p & q), ((p => q) o r).
// Sugar accepted on input: =>  <=>  =/=  (+)  ->  (all expanded at parse).

Result<Formula> parse(std::string_view text);

enum class RenderStyle {
  Primitive,  // only & o * appear
  Sugared     // re-sugars maximal => / <=> / (+) patterns, outermost first
};

std::string render(const Formula& f, RenderStyle style = RenderStyle::Primitive);

// --- Structural operations -------------------------------------------------

// Simultaneous substitution of variables.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& sub);

// The subterm at a position, if the position is valid.
std::optional<Formula> subterm_at(const Formula& f, const Path& p);

// Replace the subterms at all given positions by `replacement`. Every
// position must be valid and all addressed subterms must be syntactically
// equal (so positions can never be nested); duplicates are tolerated.
Result<Formula> replace_at(const Formula& f, const std::vector<Path>& positions,
                           const Formula& replacement);

// All positions at which `sub` occurs in `f`, in preorder.
std::vector<Path> occurrences(const Formula& f, const Formula& sub);

// Left-associated chain ((f1 op f2) op f3) ...; fails on an empty list.
Result<Formula> left_chain(const std::vector<Formula>& fs, Formula::Kind op);

// Sorted list of the distinct variable names in f.
std::vector<std::string> variables(const Formula& f);

}  // namespace nelab
