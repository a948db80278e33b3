// Order-theoretic analysis: the implication order on incompatibility models,
// bounds, orthocomplemented closure lattices, Dedekind-MacNeille completion,
// residuation, the no-go facts about lattice structure, and DOT export.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nelab/common.hpp"
#include "nelab/model.hpp"

namespace nelab {

// A finite poset with an order-reversing involution, elements 0..n-1.
struct Poset {
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq;  // n*n row-major: leq[x*n+y] = (x <= y)
  std::vector<int> star;          // antitone involution

  int n() const { return static_cast<int>(names.size()); }
  bool le(int x, int y) const {
    return leq[static_cast<std::size_t>(x * n() + y)] != 0;
  }
  int inv(int x) const { return star[static_cast<std::size_t>(x)]; }
};

// Reflexivity, antisymmetry, transitivity, involutivity, antitonicity.
ValidationReport validate_poset(const Poset& p);

// The order x <= y iff x perp y*. Reflexivity and antisymmetry come from
// model conditions (a) and (b); transitivity is exactly the trans1 class
// condition, so the construction fails with a witness on non-trans1 models.
Result<Poset> poset_from_model(const NModel& m);

// Lower/upper bounds of a subset, as sorted element lists.
std::vector<int> lower_bounds(const Poset& p, const std::vector<int>& xs);
std::vector<int> upper_bounds(const Poset& p, const std::vector<int>& xs);

// --- Incompatibility closure ----------------------------------------------

// X^perp over the carrier incompatibility relation. Requires the carrier
// relation to be symmetric and irreflexive (a reflexive pair collapses the
// analysis, so such models are rejected with a diagnostic).
Result<std::vector<int>> perp_set(const NModel& m, const std::vector<int>& xs);
// X^perpperp.
Result<std::vector<int>> perp_closure(const NModel& m,
                                      const std::vector<int>& xs);

// A finite lattice whose elements are sets over some ground carrier,
// ordered by inclusion, with an orthocomplement-style involution.
struct SetLattice {
  Poset poset;                         // inclusion order + involution
  std::vector<std::vector<int>> sets;  // element -> sorted ground indices
  int bottom = -1, top = -1;
};

// All perp-closed subsets (X = X^perpperp), ordered by inclusion, with
// X -> X^perp as the involution. Same precondition as perp_set.
Result<SetLattice> closed_set_lattice(const NModel& m);

// Dedekind-MacNeille completion of a poset with antitone involution.
// Elements are the normal ideals X = L(U(X)); the involution maps X to
// L(X^st) with X^st = { x^* : x in X }.
struct DMCompletion {
  SetLattice lattice;
  std::vector<int> embed;  // original element -> completion element
};
Result<DMCompletion> dm_completion(const Poset& p);

// --- Structural diagnostics ------------------------------------------------

struct OrthoReport {
  bool is_lattice = false;
  bool is_ortholattice = false;   // lattice + complement laws
  bool is_orthomodular = false;   // x<=y and x* meet y = 0 imply x = y
  bool is_boolean = false;        // distributive ortholattice
  std::string detail;             // failure witnesses
};
OrthoReport ortho_checks(const Poset& p);

// x tensor y <= z iff x <= (y hook z), over all triples, with <= read as
// x perp z^* on the model; reports the first failing triple.
struct ResiduationReport {
  bool ok = true;
  std::string detail;
};
ResiduationReport residuation_check(const NModel& m);

// The two no-go facts about the implication order:
//  1. x <= y implies no z lies below both x* and y  (no nonzero meets of
//     complement-comparable pairs);
//  2. if x is comparable with z* and y is comparable with z, then {x,y}
//     has no common lower bound and no common upper bound... applied to
//     every instantiating triple.
// Degenerate posets (n <= 1) pass vacuously and the report says so.
struct NogoReport {
  bool pass = true;
  bool vacuous = false;
  std::string detail;
};
NogoReport nogo_checks(const Poset& p);

// (x perp y* iff cl{x} included in cl{y}) and cl{x*} = (cl{x})^perp, for all
// x, y; this pair of properties is equivalent to trans1 on valid models.
struct EmbeddingReport {
  bool ok = true;
  std::string detail;
};
EmbeddingReport embedding_check(const NModel& m);

// An order isomorphism commuting with the involutions, if one exists.
std::optional<std::vector<int>> ortho_isomorphism(const Poset& p,
                                                  const Poset& q);

// Hasse diagram in DOT format (covers only).
std::string poset_to_dot(const Poset& p);

}  // namespace nelab
