// Logical-matrix bridge: designated matrices over the algebra signature, the
// Leibniz congruence (reference partition search plus the arrow
// characterization), the NeL-filter closure clauses, and the roundtrip
// between designated matrices and incompatibility models.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nelab/common.hpp"
#include "nelab/model.hpp"

namespace nelab {

// A logical matrix: a carrier algebra together with a set of designated
// elements. The filter is a plain subset; the NeL-filter closure clauses are
// checked on demand (nel_filter_check), never enforced at construction.
struct Matrix {
  FiniteAlgebra algebra;
  std::vector<int> filter;  // sorted unique element indices

  bool designates(int x) const;
};

// The designated matrix <A, F> of a model, F = { x : x perp f }.
Matrix matrix_of(const NModel& m);

// A partition of the carrier in canonical restricted-growth form: blocks are
// numbered by first occurrence, so block_of[0] == 0 (when nonempty) and each
// entry exceeds the running maximum of its predecessors by at most one.
struct Congruence {
  std::vector<int> block_of;

  static Congruence identity(int n);
  // Renumber an arbitrary block assignment into canonical form.
  static Congruence canonical(const std::vector<int>& raw);

  int size() const { return static_cast<int>(block_of.size()); }
  int blocks() const;
  bool same(int x, int y) const {
    return block_of[static_cast<std::size_t>(x)] ==
           block_of[static_cast<std::size_t>(y)];
  }
  bool is_identity() const { return blocks() == size(); }
  // Relation inclusion: every pair identified by `other` is identified here.
  bool contains(const Congruence& other) const;
  bool operator==(const Congruence& other) const = default;
  std::string to_string(const FiniteAlgebra& a) const;
};

// Every partition of {0..n-1}, in lexicographic restricted-growth order
// (Bell(n) entries); the reference search space for leibniz().
std::vector<Congruence> enumerate_partitions(int n);

// First defect stopping the partition from being a congruence of the algebra
// (star / tensor / circ substitutivity), or nullopt if it is one.
std::optional<std::string> congruence_defect(const FiniteAlgebra& a,
                                             const Congruence& c);

// First defect stopping the congruence from being compatible with the filter
// (a designated element may only be congruent to designated ones).
std::optional<std::string> compatibility_defect(const Matrix& m,
                                                const Congruence& c);

// The Leibniz congruence: the largest congruence compatible with the filter,
// found by exhausting every partition of the carrier. Exact reference
// algorithm, intended for small carriers (Bell(8) = 4140 candidates).
Congruence leibniz(const Matrix& m);

// Whether the matrix is reduced: its Leibniz congruence is the identity.
bool is_reduced(const Matrix& m);

// The arrow characterization: x and y are congruent iff x => y and y => x
// are both designated. Fails with a precondition report when that relation
// is not a filter-compatible congruence; whenever the filter satisfies the
// NeL-filter clauses it succeeds and equals leibniz().
Result<Congruence> leibniz_via_arrows(const Matrix& m);

// The closure clauses for a logical NeL-filter over the algebra:
//   (1) every instance of every NeL axiom is designated;
//   (2) detachment: x and x => y designated imply y designated;
//   (3) x and y are designated iff x tensor y is;
//   (4) x => y and y => x designated imply d(x) => d(y) designated for
//       every unary polynomial d of the algebra.
// Plus nonemptiness. Clause (4) is decided through the one-step
// translations x*, x tensor c, c tensor x, x circ c, c circ x: their
// compositions generate every unary polynomial in which the variable
// occurs, and the constant polynomials only repeat what clause (1) demands
// of the A1 instances, so the check is exact on a finite carrier.
ValidationReport nel_filter_check(const Matrix& m);

// An incompatibility relation induced on a carrier, right-constant
// convention (the poles only ever appear on the right-hand side).
struct PerpRelation {
  std::vector<std::uint8_t> perp;    // n*n, row-major
  std::vector<std::uint8_t> perp_t;  // n
  std::vector<std::uint8_t> perp_f;  // n
};

// The relation induced by the designated set G:
//   x perp y  iff  x => y*  is designated,
//   x perp f  iff  x        is designated,
//   x perp t  iff  x*       is designated.
PerpRelation perp_from_filter(const Matrix& m);

// The full induced structure (A, perp_G, {t, f}) as an unvalidated model.
NModel nmodel_from_matrix(const Matrix& m, std::string name = "");

// Facts verified by the matrix <-> model roundtrip on one finite object.
struct RoundtripReport {
  bool filter_roundtrip = false;  // designated set recovered from the
                                  // induced relation
  bool perp_roundtrip = false;    // relation recovered from its designated
                                  // set
  bool nel_filter = false;        // closure clauses hold
  bool reduced = false;           // Leibniz congruence is the identity
  bool nmodel_valid = false;      // model conditions (a)-(h) hold
  bool equivalence = false;       // reduced NeL matrix <-> valid model
  bool ok = false;                // every claim applicable to the input kind
  std::string detail;
};

// Matrix direction: both roundtrip identities, plus the equivalence
// (reduced matrix model of NeL) <-> (the induced relation is a valid model).
RoundtripReport roundtrip_check(const Matrix& m);
// Model direction: the relation is recovered from its designated set
// exactly when the model is valid, with the same equivalence on the
// induced matrix.
RoundtripReport roundtrip_check(const NModel& m);

}  // namespace nelab
