// Finite incompatibility models: algebras over {tensor, circ, star}, the
// incompatibility relation with its two poles t / f, validation of the model
// conditions (a)-(h), class tags, and formula evaluation / validity.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nelab/common.hpp"
#include "nelab/formula.hpp"

namespace nelab {

// A finite algebra with two commutative binary operations and a unary star.
// Elements are dense indices 0..n-1; `names` carries the display names.
struct FiniteAlgebra {
  std::vector<std::string> names;
  std::vector<int> star_tab;            // n entries
  std::vector<int> tensor_tab;          // n*n entries, row-major
  std::vector<int> circ_tab;            // n*n entries, row-major

  int n() const { return static_cast<int>(names.size()); }
  int star(int x) const { return star_tab[static_cast<std::size_t>(x)]; }
  int tensor(int x, int y) const {
    return tensor_tab[static_cast<std::size_t>(x * n() + y)];
  }
  int circ(int x, int y) const {
    return circ_tab[static_cast<std::size_t>(x * n() + y)];
  }
  // Derived operations.
  int imp(int x, int y) const { return star(circ(x, star(y))); }
  int oplus(int x, int y) const { return star(tensor(star(x), star(y))); }
  int eqv(int x, int y) const { return tensor(imp(x, y), imp(y, x)); }
  int neq(int x, int y) const { return star(eqv(x, y)); }

  std::optional<int> index_of(std::string_view name) const;
};

// An incompatibility model: an algebra plus the incompatibility relation,
// stored as the carrier-carrier part and the two constant columns x perp t
// and x perp f (constants never occur on the left or inside formulas).
struct NModel {
  std::string name;
  FiniteAlgebra alg;
  std::vector<std::uint8_t> perp;       // n*n, row-major
  std::vector<std::uint8_t> perp_t;     // n
  std::vector<std::uint8_t> perp_f;     // n
  std::vector<std::string> declared_classes;

  int n() const { return alg.n(); }
  bool perp2(int x, int y) const {
    return perp[static_cast<std::size_t>(x * n() + y)] != 0;
  }
  bool perpt(int x) const { return perp_t[static_cast<std::size_t>(x)] != 0; }
  bool perpf(int x) const { return perp_f[static_cast<std::size_t>(x)] != 0; }
  const std::string& elem_name(int x) const {
    return alg.names[static_cast<std::size_t>(x)];
  }
};

// --- Validation ------------------------------------------------------------

struct LawViolation {
  std::string law;                  // e.g. "tensor-commutativity", "(b)"
  std::vector<std::string> witness; // element names instantiating the law
  std::string detail;               // human-readable explanation
};

struct ValidationReport {
  bool ok = true;
  std::vector<LawViolation> violations;
  void add(std::string law, std::vector<std::string> witness,
           std::string detail);
  std::string to_string() const;
};

// Groupoid laws: commutativity of both operations, star involution, and the
// exchange identity (x tensor y) circ z = (x tensor z) circ y; plus table
// well-formedness. Associativity of tensor is checked iff require_assoc.
ValidationReport validate_algebra(const FiniteAlgebra& a, bool require_assoc);

// Full model validation: algebra laws, symmetry of the carrier
// incompatibility relation, and conditions (a)-(h).
ValidationReport validate_nmodel(const NModel& m, bool require_assoc = false);

// --- Class tags ------------------------------------------------------------

enum class ClassTag {
  Nw,       // passes validate_nmodel
  NAssoc,   // tensor associative as well
  I,        // x perp x forces a one-element model
  I2,       // x perp y* and x perp y force a one-element model
  SCond,    // some x perp t and perp f  =>  every z perp f
  Di,       // x perp f  =>  (x oplus y) perp f
  Trans1,   // x perp y* and y perp z*  =>  x perp z*
  Regular,  // x != y  <=>  (x neq y) perp f
  Full,     // SCond holds and every x is perp f or perp t
  Trivial   // one-element carrier
};

std::string to_string(ClassTag t);
std::optional<ClassTag> class_tag_from_string(std::string_view s);
const std::vector<ClassTag>& all_class_tags();

struct ClassCheck {
  bool holds = false;
  std::string detail;  // witness on failure, reason on success when useful
};
ClassCheck class_check(const NModel& m, ClassTag tag);

// --- Evaluation ------------------------------------------------------------

// Variable assignment: variable name -> element index.
using Assignment = std::map<std::string, int>;

std::string assignment_to_string(const NModel& m, const Assignment& a);

// Formula compiled to a flat postfix program for fast repeated evaluation.
class CompiledTerm {
 public:
  static CompiledTerm compile(const Formula& f,
                              const std::vector<std::string>& var_order);
  int eval(const FiniteAlgebra& a, const int* env) const;
  int num_vars() const { return num_vars_; }

 private:
  struct Op {
    std::int8_t code;  // 0 = push var, 1 = star, 2 = tensor, 3 = circ
    int idx = 0;       // var slot for code 0
  };
  std::vector<Op> ops_;
  int num_vars_ = 0;
};

// Evaluate under a (total) assignment; fails if a variable is unassigned or
// an element index is out of range.
Result<int> evaluate(const NModel& m, const Formula& f, const Assignment& a);

struct HoldsVerdict {
  bool holds = false;
  std::optional<Assignment> witness;  // falsifying / separating assignment
  std::string detail;
};

// M validates f iff every assignment sends f to an element incompatible
// with f (i.e. into the designated set).
HoldsVerdict holds(const NModel& m, const Formula& f);

// Local consequence over M: every assignment designating all premises
// designates the conclusion.
HoldsVerdict consequence(const NModel& m, const std::vector<Formula>& premises,
                         const Formula& conclusion);

// A quasi-identity in designation form: premises designated => conclusion
// designated (premises empty = plain validity).
struct HornCondition {
  std::vector<Formula> premises;
  Formula conclusion;
};
HoldsVerdict check_horn(const NModel& m, const HornCondition& h);

// The designated set F = { x : x perp f }, as sorted element indices.
std::vector<int> designated(const NModel& m);

}  // namespace nelab
