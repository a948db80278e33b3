// The embedded corpus: the concrete finite models, the reference poset, the
// named derivations, and frozen computed values, all addressable by name
// (the CLI exposes them under corpus:NAME).
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nelab/calculus.hpp"
#include "nelab/model.hpp"
#include "nelab/order.hpp"

namespace nelab::corpus {

// --- Models ----------------------------------------------------------------

// M1..M5 and the one-element model T1.
const std::vector<std::string>& model_names();
const NModel* find_model(std::string_view name);

// --- Reference poset -------------------------------------------------------

// The six-element poset induced by M2 (two three-chains swapped by star),
// available under the name "figure-2".
const Poset& reference_poset();

// --- Derivations -----------------------------------------------------------

struct CorpusProof {
  std::string name;         // e.g. "aristotle-1"
  std::string description;  // what the derivation establishes
  Proof proof;
};

const std::vector<CorpusProof>& proofs();
const CorpusProof* find_proof(std::string_view name);

// --- Computed values -------------------------------------------------------

// Small frozen facts (evaluations, failure witnesses) that regression tests
// and the reproduce command re-derive and compare.
struct ComputedValue {
  std::string name;
  std::string description;
  std::string value;  // rendered canonical form
};

const std::vector<ComputedValue>& computed_values();
const ComputedValue* find_computed_value(std::string_view name);

// Re-derives every computed value from the live implementation; an entry
// whose recomputation differs is returned with both strings.
struct ComputedValueMismatch {
  std::string name;
  std::string frozen;
  std::string recomputed;
};
std::vector<ComputedValueMismatch> recheck_computed_values();

}  // namespace nelab::corpus
