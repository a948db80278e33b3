// Exhaustive enumeration of finite incompatibility models and countermodel
// search, by depth-first completion of partially filled tables.
//
// The search assigns the star table first (involutions, fewest fixed points
// first), then the circ table, then the tensor table (pruned by the exchange
// identity as cells fill in), and finally the incompatibility relation.  The
// relation is recovered from the single column "x perp t": condition (c)
// forces x perp y = (x circ y) perp t and condition (d) forces
// x perp f = x* perp t, so only 2^n candidate columns remain, and conditions
// (a), (f) and (h) reduce to a precomputed set of column positions that must
// be present.  Every surviving candidate is rebuilt as a full model and
// re-validated through validate_nmodel before it is reported, so no
// propagation shortcut can leak an invalid structure.
//
// Results are deterministic: fixed variable and value order, and "first hit"
// for countermodels means the first model in that order.  The search runs on
// one thread; splitting work over the disjoint star-assignment subtrees is a
// safe parallelization (the only shared state would be the node counter and
// the best result), but no such mechanism is provided here.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nelab/common.hpp"
#include "nelab/formula.hpp"
#include "nelab/model.hpp"

namespace nelab {

struct SearchLimits {
  std::uint64_t max_nodes = 200'000'000;  // table/column assignments tried
  int max_models = 10'000;                // emission cap for enumeration
  long long max_millis = 60'000;          // wall-clock cap
};

// A search request.  `carrier_size` is the exact size for enumerate_models
// and the largest size tried by find_countermodel.  Every emitted model must
// lie in all the classes in `classes` and satisfy all of `conditions`.
// Partial tables can be pinned through the seed fields (-1 marks a free
// entry); seeded entries must already respect commutativity and the star
// involution.  `iso_prune` collapses isomorphic results to one canonical
// representative; unset, it defaults to on for enumeration and off for
// countermodel search.
struct SearchSpec {
  int carrier_size = 1;
  std::vector<ClassTag> classes;
  std::vector<HornCondition> conditions;
  std::optional<Formula> target_formula;   // countermodel: formula to falsify
  std::optional<HornCondition> target_rule;  // countermodel: rule to falsify
  std::optional<std::vector<int>> seed_star;    // n entries or empty
  std::optional<std::vector<int>> seed_circ;    // n*n entries, row-major
  std::optional<std::vector<int>> seed_tensor;  // n*n entries, row-major
  std::optional<bool> iso_prune;
  SearchLimits limits;
};

struct SearchResult {
  std::vector<NModel> models;
  std::uint64_t nodes = 0;
  bool exhausted = false;  // true iff the whole space was covered
};

struct Countermodel {
  NModel model;
  Assignment assignment;  // falsifying assignment over the target's variables
  std::string detail;
};

struct CountermodelResult {
  std::optional<Countermodel> found;
  std::uint64_t nodes = 0;
  // With no hit: true iff every size 1..carrier_size was fully swept, so no
  // countermodel of that size exists.  With a hit the search stops early and
  // this stays false.
  bool exhausted = false;
  int sizes_completed = 0;  // largest k with sizes 1..k fully swept
};

// Enumerate every model of exactly spec.carrier_size elements that lies in
// the requested classes and satisfies the extra conditions.  Targets are
// ignored.  Errors on a malformed spec (bad size, budgets, or seeds).
Result<SearchResult> enumerate_models(const SearchSpec& spec);

// Find the first model falsifying the target, trying carrier sizes in
// increasing order, so a hit is minimal in size for the explored range.
// Exactly one of target_formula / target_rule must be set.  A formula is
// falsified by an assignment evaluating it outside the designated set; a
// rule by an assignment designating every premise but not the conclusion.
Result<CountermodelResult> find_countermodel(const SearchSpec& spec);

// Canonical encoding of a model: the least flattened
// (n, star, circ, tensor, perp, perp_t, perp_f) tuple over all carrier
// permutations.  Two models have equal canonical forms iff they are
// isomorphic.  Names play no part.  Expects a structurally well-formed
// model; returns an empty form if the table sizes are inconsistent.
using CanonicalForm = std::vector<int>;
CanonicalForm canonical_form(const NModel& m);

// Rebuild a model from a canonical (or any well-formed) flat encoding.
// Elements are named a, b, c, ...
Result<NModel> model_from_form(const CanonicalForm& form,
                               std::string name = "from-form");

}  // namespace nelab
