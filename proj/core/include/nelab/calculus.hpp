// Hilbert-style proof checking: axiom schemas, rules, the system registry
// (theorem calculi and consequence calculi over the same templates), and
// line-by-line verdicts.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nelab/common.hpp"
#include "nelab/formula.hpp"

namespace nelab {

enum class AxiomId {
  A1,    // phi => phi
  A2,    // (phi o psi) => (psi o phi)
  A3,    // phi => phi**
  A4,    // (phi => psi) => (phi o psi)
  A5,    // (phi & psi) <=> (psi & phi)
  A5s,   // (phi & psi) => (psi & phi)
  A6,    // ((phi & psi) => chi) => ((phi & chi*) => psi*)
  A7,    // pairwise inequivalence of phi,psi,chi implies the syllogism chain
  AS1,   // ((phi & psi) & chi) => (phi & (psi & chi))
  AS2,   // (phi & (psi & chi)) => ((phi & psi) & chi)
  S,     // (phi & psi) => phi            (trivializing)
  Id1,   // (phi & phi) => phi            (trivializing)
  Id2,   // phi => (phi & phi)
  D,     // phi => (phi (+) psi)          (trivializing)
  A9,    // (phi & psi) => (phi o psi)
  A9s    // (phi & (phi => psi)) => psi
};

enum class RuleId {
  MP,    // from phi => psi and phi, infer psi
  Adj,   // from phi and psi, infer phi & psi
  CE,    // from phi & psi, infer phi (left conjunct)
  Eq1,   // from phi <=> psi and chi, infer chi with listed phi-occurrences
         // replaced by psi (occurrence paths are part of the step)
  Eq,    // from phi <=> psi, infer chi <=> chi' (unary replacement variant)
  DI,    // from phi, infer phi (+) psi
  I,     // from phi => phi*, infer anything
  I2,    // from phi => psi and phi => psi*, infer anything
  ECQ,   // from phi and phi*, infer anything
  A8     // from phi => psi and psi => chi, infer phi => chi
};

enum class CalculusMode {
  TheoremOnly,  // rules apply to theorems; premise steps are unavailable
  Consequence   // strong rules; premise steps allowed
};

std::string to_string(AxiomId id);
std::string to_string(RuleId id);
std::optional<AxiomId> axiom_from_string(std::string_view s);
std::optional<RuleId> rule_from_string(std::string_view s);
const std::vector<AxiomId>& all_axioms();
const std::vector<RuleId>& all_rules();

// The schema as a formula over the metavariables phi, psi, chi.
Formula axiom_template(AxiomId id);

// First-order pattern matching of a template against a concrete formula
// (every template variable is a metavariable; repeated metavariables must
// bind syntactically equal subformulas). No associativity/commutativity.
std::optional<std::map<std::string, Formula>> match(const Formula& pattern,
                                                    const Formula& subject);
std::optional<std::map<std::string, Formula>> match_axiom(AxiomId id,
                                                          const Formula& f);

// --- Systems ---------------------------------------------------------------

struct SystemSpec {
  std::string name;
  CalculusMode mode = CalculusMode::TheoremOnly;
  std::vector<AxiomId> axioms;
  std::vector<RuleId> rules;
  bool known_trivial = false;  // report-only; checking still works
  std::string note;

  bool has_axiom(AxiomId id) const;
  bool has_rule(RuleId id) const;
};

// All registered systems (the named base systems and their studied
// extensions/variants).
const std::vector<SystemSpec>& system_registry();

// Look up a system by registered name, alias, or the generic extension
// syntax BASE+EXT[+EXT...] where BASE is a registered name and each EXT is
// an axiom or rule name (e.g. "NL+S", "NL++Id1").
Result<SystemSpec> find_system(std::string_view name);

// --- Proofs ----------------------------------------------------------------

struct Justification {
  enum class Kind { Premise, Axiom, Rule };
  Kind kind = Kind::Axiom;
  int premise_index = -1;          // Premise: 0-based into Proof::premises
  AxiomId axiom = AxiomId::A1;     // Axiom
  RuleId rule = RuleId::MP;        // Rule
  std::vector<int> from;           // Rule: 1-based earlier line numbers
  std::vector<Path> paths;         // Eq1 / Eq: occurrence positions

  static Justification premise(int index);
  static Justification axiom_use(AxiomId id);
  static Justification rule_use(RuleId id, std::vector<int> from,
                                std::vector<Path> paths = {});
};

struct ProofStep {
  Formula formula;
  Justification just;
};

struct Proof {
  std::string system;
  std::vector<Formula> premises;
  std::vector<ProofStep> steps;
};

struct StepVerdict {
  bool ok = true;
  std::string reason;
};

struct StepFailure {
  int line = 0;  // 1-based
  std::string reason;
};

struct Verdict {
  bool ok = true;
  std::optional<StepFailure> first_failure;
};

// Check a single step (line is 1-based) against a system; earlier steps are
// assumed good.
StepVerdict check_step(const SystemSpec& sys, const Proof& p, int line);

// Check a whole proof; reports the first failing line. A proof for a system
// name that does not resolve fails at line 0.
Verdict check_proof(const Proof& p);
Verdict check_proof(const SystemSpec& sys, const Proof& p);

}  // namespace nelab
