// Axiom schemas, inference rules, the system registry, and the step-by-step
// proof checker.
#include "nelab/calculus.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace nelab {

namespace {

// Parse a hard-coded template; these strings are compile-time constants and
// must always be well-formed.
Formula T(const char* text) {
  auto r = parse(text);
  if (!r) throw std::logic_error(std::string("bad template: ") + text);
  return *r;
}

}  // namespace

std::string to_string(AxiomId id) {
  switch (id) {
    case AxiomId::A1: return "A1";
    case AxiomId::A2: return "A2";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A5: return "A5";
    case AxiomId::A5s: return "A5*";
    case AxiomId::A6: return "A6";
    case AxiomId::A7: return "A7";
    case AxiomId::AS1: return "AS1";
    case AxiomId::AS2: return "AS2";
    case AxiomId::S: return "S";
    case AxiomId::Id1: return "Id1";
    case AxiomId::Id2: return "Id2";
    case AxiomId::D: return "D";
    case AxiomId::A9: return "A9";
    case AxiomId::A9s: return "A9*";
  }
  return "?";
}

std::string to_string(RuleId id) {
  switch (id) {
    case RuleId::MP: return "MP";
    case RuleId::Adj: return "Adj";
    case RuleId::CE: return "CE";
    case RuleId::Eq1: return "Eq1";
    case RuleId::Eq: return "Eq";
    case RuleId::DI: return "DI";
    case RuleId::I: return "I";
    case RuleId::I2: return "I2";
    case RuleId::ECQ: return "ECQ";
    case RuleId::A8: return "A8";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_string(std::string_view s) {
  for (AxiomId id : all_axioms())
    if (to_string(id) == s) return id;
  // ASCII-friendly aliases for the starred names.
  if (s == "A5s") return AxiomId::A5s;
  if (s == "A9s") return AxiomId::A9s;
  return std::nullopt;
}

std::optional<RuleId> rule_from_string(std::string_view s) {
  for (RuleId id : all_rules())
    if (to_string(id) == s) return id;
  return std::nullopt;
}

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> v = {
      AxiomId::A1, AxiomId::A2,  AxiomId::A3,  AxiomId::A4,
      AxiomId::A5, AxiomId::A5s, AxiomId::A6,  AxiomId::A7,
      AxiomId::AS1, AxiomId::AS2, AxiomId::S,  AxiomId::Id1,
      AxiomId::Id2, AxiomId::D,  AxiomId::A9,  AxiomId::A9s};
  return v;
}

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> v = {
      RuleId::MP, RuleId::Adj, RuleId::CE,  RuleId::Eq1, RuleId::Eq,
      RuleId::DI, RuleId::I,   RuleId::I2,  RuleId::ECQ, RuleId::A8};
  return v;
}

Formula axiom_template(AxiomId id) {
  switch (id) {
    case AxiomId::A1: { static const Formula f = T("(phi => phi)"); return f; }
    case AxiomId::A2: {
      static const Formula f = T("((phi o psi) => (psi o phi))");
      return f;
    }
    case AxiomId::A3: { static const Formula f = T("(phi => phi**)"); return f; }
    case AxiomId::A4: {
      static const Formula f = T("((phi => psi) => (phi o psi))");
      return f;
    }
    case AxiomId::A5: {
      static const Formula f = T("((phi & psi) <=> (psi & phi))");
      return f;
    }
    case AxiomId::A5s: {
      static const Formula f = T("((phi & psi) => (psi & phi))");
      return f;
    }
    case AxiomId::A6: {
      static const Formula f =
          T("(((phi & psi) => chi) => ((phi & chi*) => psi*))");
      return f;
    }
    case AxiomId::A7: {
      static const Formula f =
          T("((((phi =/= psi) & (phi =/= chi)) & (psi =/= chi)) => "
            "((phi => psi) => ((psi => chi) => (phi => chi))))");
      return f;
    }
    case AxiomId::AS1: {
      static const Formula f =
          T("(((phi & psi) & chi) => (phi & (psi & chi)))");
      return f;
    }
    case AxiomId::AS2: {
      static const Formula f =
          T("((phi & (psi & chi)) => ((phi & psi) & chi))");
      return f;
    }
    case AxiomId::S: { static const Formula f = T("((phi & psi) => phi)"); return f; }
    case AxiomId::Id1: {
      static const Formula f = T("((phi & phi) => phi)");
      return f;
    }
    case AxiomId::Id2: {
      static const Formula f = T("(phi => (phi & phi))");
      return f;
    }
    case AxiomId::D: {
      static const Formula f = T("(phi => (phi (+) psi))");
      return f;
    }
    case AxiomId::A9: {
      static const Formula f = T("((phi & psi) => (phi o psi))");
      return f;
    }
    case AxiomId::A9s: {
      static const Formula f = T("((phi & (phi => psi)) => psi)");
      return f;
    }
  }
  throw std::logic_error("unknown axiom id");
}

std::optional<std::map<std::string, Formula>> match(const Formula& pattern,
                                                    const Formula& subject) {
  std::map<std::string, Formula> binding;
  // Iterative pair-stack walk; every pattern variable is a metavariable.
  std::vector<std::pair<Formula, Formula>> todo{{pattern, subject}};
  while (!todo.empty()) {
    auto [p, s] = todo.back();
    todo.pop_back();
    if (p.is_var()) {
      auto [it, inserted] = binding.emplace(p.var_name(), s);
      if (!inserted && it->second != s) return std::nullopt;
      continue;
    }
    if (p.kind() != s.kind()) return std::nullopt;
    for (int i = 0; i < p.arity(); ++i)
      todo.emplace_back(p.child(i), s.child(i));
  }
  return binding;
}

std::optional<std::map<std::string, Formula>> match_axiom(AxiomId id,
                                                          const Formula& f) {
  return match(axiom_template(id), f);
}

// --- Systems ---------------------------------------------------------------

bool SystemSpec::has_axiom(AxiomId id) const {
  return std::find(axioms.begin(), axioms.end(), id) != axioms.end();
}

bool SystemSpec::has_rule(RuleId id) const {
  return std::find(rules.begin(), rules.end(), id) != rules.end();
}

namespace {

bool trivializing(const std::vector<AxiomId>& axioms) {
  for (AxiomId id : axioms)
    if (id == AxiomId::S || id == AxiomId::Id1 || id == AxiomId::D) return true;
  return false;
}

SystemSpec make_system(std::string name, CalculusMode mode,
                       std::vector<AxiomId> axioms, std::vector<RuleId> rules,
                       std::string note = "") {
  SystemSpec s;
  s.name = std::move(name);
  s.mode = mode;
  s.axioms = std::move(axioms);
  s.rules = std::move(rules);
  s.known_trivial = trivializing(s.axioms);
  s.note = std::move(note);
  return s;
}

}  // namespace

const std::vector<SystemSpec>& system_registry() {
  static const std::vector<SystemSpec> registry = [] {
    using A = AxiomId;
    using R = RuleId;
    const std::vector<A> base_ax = {A::A1, A::A2, A::A3, A::A4,
                                    A::A5, A::A6, A::A7};
    const std::vector<A> as_ax = {A::A1, A::A2, A::A3, A::A4, A::A5,
                                  A::A6, A::A7, A::AS1, A::AS2};
    const std::vector<R> base_rl = {R::MP, R::Adj, R::CE, R::Eq1};
    auto plus = [](std::vector<R> rl, R extra) {
      rl.push_back(extra);
      return rl;
    };
    const std::vector<R> di_rl = plus(base_rl, R::DI);

    std::vector<SystemSpec> v;
    v.push_back(make_system(
        "NL", CalculusMode::TheoremOnly, base_ax, base_rl,
        "theorem calculus: rules apply to theorems only"));
    v.push_back(make_system("NLas", CalculusMode::TheoremOnly, as_ax, base_rl,
                            "NL plus conjunction associativity"));
    v.push_back(make_system(
        "NeL", CalculusMode::Consequence, base_ax, base_rl,
        "consequence calculus: strong rules, premises allowed"));
    v.push_back(make_system("NeLas", CalculusMode::Consequence, as_ax, base_rl,
                            "NeL plus conjunction associativity"));
    v.push_back(make_system("NL+", CalculusMode::TheoremOnly, base_ax, di_rl,
                            "NL plus truth-side disjunction introduction"));
    v.push_back(make_system("NLas+", CalculusMode::TheoremOnly, as_ax, di_rl,
                            "NLas plus truth-side disjunction introduction"));
    v.push_back(make_system("NeL+", CalculusMode::Consequence, base_ax, di_rl,
                            "NeL plus strong disjunction introduction"));
    v.push_back(make_system("NeLas+", CalculusMode::Consequence, as_ax, di_rl,
                            "NeLas plus strong disjunction introduction"));
    v.push_back(make_system("NeL1", CalculusMode::Consequence, base_ax,
                            plus(di_rl, R::A8),
                            "NeL+ plus the implication-transitivity rule"));
    v.push_back(make_system("NeLas1", CalculusMode::Consequence, as_ax,
                            plus(di_rl, R::A8),
                            "NeLas+ plus the implication-transitivity rule"));
    v.push_back(make_system("NeL+I", CalculusMode::Consequence, base_ax,
                            plus(base_rl, R::I),
                            "NeL plus the weak superconnexivity rule"));
    v.push_back(make_system("NeL+I2", CalculusMode::Consequence, base_ax,
                            plus(base_rl, R::I2),
                            "NeL plus the strong-connexivity rule"));
    v.push_back(make_system("NeL^ECQ", CalculusMode::Consequence, base_ax,
                            plus(base_rl, R::ECQ),
                            "NeL plus ex contradictione quodlibet"));
    {
      std::vector<A> ax = {A::A1, A::A2, A::A3, A::A4,
                           A::A5s, A::A6, A::A7};
      v.push_back(make_system(
          "NL-A5*", CalculusMode::TheoremOnly, ax, base_rl,
          "NL with the one-way conjunction-commutativity axiom"));
    }
    v.push_back(make_system("NL-Eq", CalculusMode::TheoremOnly, base_ax,
                            {R::MP, R::Adj, R::CE, R::Eq},
                            "NL with premise-free replacement of equivalents"));
    return v;
  }();
  return registry;
}

Result<SystemSpec> find_system(std::string_view name) {
  for (const auto& s : system_registry())
    if (s.name == name) return Result<SystemSpec>::ok(s);
  if (name == "NeL+ECQ") return find_system("NeL^ECQ");

  // Generic extension syntax: longest registered base name followed by
  // '+'-separated axiom/rule extensions, e.g. "NL+S" or "NL++Id1".
  const SystemSpec* base = nullptr;
  for (const auto& s : system_registry()) {
    if (name.size() > s.name.size() + 1 &&
        name.substr(0, s.name.size()) == s.name &&
        name[s.name.size()] == '+') {
      if (!base || s.name.size() > base->name.size()) base = &s;
    }
  }
  if (!base)
    return Result<SystemSpec>::fail("unknown system '" + std::string(name) +
                                    "'");
  SystemSpec out = *base;
  out.name = std::string(name);
  std::string exts(name.substr(base->name.size() + 1));
  std::istringstream ss(exts);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok.empty())
      return Result<SystemSpec>::fail("empty extension in '" +
                                      std::string(name) + "'");
    if (auto ax = axiom_from_string(tok)) {
      if (!out.has_axiom(*ax)) out.axioms.push_back(*ax);
    } else if (auto rl = rule_from_string(tok)) {
      if (!out.has_rule(*rl)) out.rules.push_back(*rl);
    } else {
      return Result<SystemSpec>::fail("unknown extension '" + tok + "' in '" +
                                      std::string(name) + "'");
    }
  }
  out.known_trivial = trivializing(out.axioms);
  if (out.known_trivial && out.note.find("trivial") == std::string::npos)
    out.note += (out.note.empty() ? "" : "; ") +
                std::string("known-trivial: see the triviality derivations");
  return Result<SystemSpec>::ok(out);
}

// --- Proof checking --------------------------------------------------------

Justification Justification::premise(int index) {
  Justification j;
  j.kind = Kind::Premise;
  j.premise_index = index;
  return j;
}

Justification Justification::axiom_use(AxiomId id) {
  Justification j;
  j.kind = Kind::Axiom;
  j.axiom = id;
  return j;
}

Justification Justification::rule_use(RuleId id, std::vector<int> from,
                                      std::vector<Path> paths) {
  Justification j;
  j.kind = Kind::Rule;
  j.rule = id;
  j.from = std::move(from);
  j.paths = std::move(paths);
  return j;
}

namespace {

// Destructure an implication-shaped formula (x o y*)* into (x, y).
std::optional<std::pair<Formula, Formula>> as_imp(const Formula& f) {
  if (!f.is_star()) return std::nullopt;
  const Formula& body = f.child(0);
  if (!body.is_circ() || !body.right().is_star()) return std::nullopt;
  return std::make_pair(body.left(), body.right().child(0));
}

// Destructure an equivalence-shaped formula (x => y) & (y => x) into (x, y).
std::optional<std::pair<Formula, Formula>> as_eqv(const Formula& f) {
  if (!f.is_tensor()) return std::nullopt;
  auto l = as_imp(f.left()), r = as_imp(f.right());
  if (!l || !r) return std::nullopt;
  if (l->first != r->second || l->second != r->first) return std::nullopt;
  return std::make_pair(l->first, l->second);
}

// Destructure a disjunction-shaped formula (x* & y*)* into (x, y).
std::optional<std::pair<Formula, Formula>> as_oplus(const Formula& f) {
  if (!f.is_star()) return std::nullopt;
  const Formula& body = f.child(0);
  if (!body.is_tensor() || !body.left().is_star() || !body.right().is_star())
    return std::nullopt;
  return std::make_pair(body.left().child(0), body.right().child(0));
}

StepVerdict bad(std::string reason) { return {false, std::move(reason)}; }

StepVerdict check_rule(const SystemSpec& sys, const Proof& p, int line) {
  const ProofStep& step = p.steps[static_cast<std::size_t>(line - 1)];
  const Justification& j = step.just;
  const RuleId rule = j.rule;
  if (!sys.has_rule(rule))
    return bad("rule " + to_string(rule) + " is not part of system " +
               sys.name);

  // Cited-line sanity.
  const std::size_t arity = [&]() -> std::size_t {
    switch (rule) {
      case RuleId::CE:
      case RuleId::DI:
      case RuleId::I:
      case RuleId::Eq: return 1;
      default: return 2;
    }
  }();
  if (j.from.size() != arity)
    return bad("rule " + to_string(rule) + " expects " +
               std::to_string(arity) + " cited line(s), got " +
               std::to_string(j.from.size()));
  for (int ln : j.from) {
    if (ln < 1 || ln >= line)
      return bad("rule " + to_string(rule) + " cites line " +
                 std::to_string(ln) + ", which is not an earlier line");
  }
  const bool takes_paths = rule == RuleId::Eq1 || rule == RuleId::Eq;
  if (!takes_paths && !j.paths.empty())
    return bad("rule " + to_string(rule) + " does not take occurrence paths");
  if (takes_paths && j.paths.empty())
    return bad("rule " + to_string(rule) +
               " needs at least one occurrence path");

  auto cited = [&](std::size_t i) -> const Formula& {
    return p.steps[static_cast<std::size_t>(j.from[i] - 1)].formula;
  };
  const Formula& cur = step.formula;

  switch (rule) {
    case RuleId::MP: {
      const Formula &x = cited(0), &y = cited(1);
      if (x == Formula::imp(y, cur) || y == Formula::imp(x, cur))
        return {true, ""};
      return bad(
          "MP: neither cited line is the implication from the other cited "
          "line to this line's formula");
    }
    case RuleId::Adj: {
      if (cur == Formula::tensor(cited(0), cited(1))) return {true, ""};
      return bad(
          "Adj: this line's formula is not the conjunction of the cited "
          "lines in citation order");
    }
    case RuleId::CE: {
      const Formula& x = cited(0);
      if (x.is_tensor() && x.left() == cur) return {true, ""};
      return bad(
          "CE: the cited line is not a conjunction whose left conjunct is "
          "this line's formula");
    }
    case RuleId::Eq1: {
      auto eq = as_eqv(cited(0));
      if (!eq)
        return bad("Eq1: the first cited line is not an equivalence");
      const Formula& chi = cited(1);
      auto occurrence = subterm_at(chi, j.paths.front());
      if (!occurrence || *occurrence != eq->first)
        return bad(
            "Eq1: a listed occurrence in the second cited line is not the "
            "left side of the equivalence");
      auto replaced = replace_at(chi, j.paths, eq->second);
      if (!replaced) return bad("Eq1: " + replaced.error());
      if (*replaced == cur) return {true, ""};
      return bad(
          "Eq1: replacing the listed occurrences does not give this line's "
          "formula");
    }
    case RuleId::Eq: {
      auto eq = as_eqv(cited(0));
      if (!eq) return bad("Eq: the cited line is not an equivalence");
      auto cur_eq = as_eqv(cur);
      if (!cur_eq)
        return bad("Eq: this line's formula is not an equivalence");
      const Formula& chi = cur_eq->first;
      auto occurrence = subterm_at(chi, j.paths.front());
      if (!occurrence || *occurrence != eq->first)
        return bad(
            "Eq: a listed occurrence in the left side is not the left side "
            "of the cited equivalence");
      auto replaced = replace_at(chi, j.paths, eq->second);
      if (!replaced) return bad("Eq: " + replaced.error());
      if (*replaced == cur_eq->second) return {true, ""};
      return bad(
          "Eq: the right side is not the left side with the listed "
          "occurrences replaced");
    }
    case RuleId::DI: {
      auto op = as_oplus(cur);
      if (op && op->first == cited(0)) return {true, ""};
      return bad(
          "DI: this line's formula is not a disjunction whose left disjunct "
          "is the cited line");
    }
    case RuleId::I: {
      auto im = as_imp(cited(0));
      if (im && im->second == Formula::star(im->first)) return {true, ""};
      return bad(
          "I: the cited line is not of the form (phi => phi*)");
    }
    case RuleId::I2: {
      auto a = as_imp(cited(0)), b = as_imp(cited(1));
      if (a && b && a->first == b->first &&
          (a->second == Formula::star(b->second) ||
           b->second == Formula::star(a->second)))
        return {true, ""};
      return bad(
          "I2: the cited lines are not a pair (phi => psi), (phi => psi*)");
    }
    case RuleId::ECQ: {
      const Formula &x = cited(0), &y = cited(1);
      if (y == Formula::star(x) || x == Formula::star(y)) return {true, ""};
      return bad("ECQ: the cited lines are not a formula and its negation");
    }
    case RuleId::A8: {
      auto a = as_imp(cited(0)), b = as_imp(cited(1));
      auto chain = [&](const std::pair<Formula, Formula>& u,
                       const std::pair<Formula, Formula>& v) {
        return u.second == v.first && cur == Formula::imp(u.first, v.second);
      };
      if (a && b && (chain(*a, *b) || chain(*b, *a))) return {true, ""};
      return bad(
          "A8: the cited lines do not chain into this line's implication");
    }
  }
  return bad("unknown rule");
}

}  // namespace

StepVerdict check_step(const SystemSpec& sys, const Proof& p, int line) {
  if (line < 1 || line > static_cast<int>(p.steps.size()))
    return bad("line " + std::to_string(line) + " is out of range");
  const ProofStep& step = p.steps[static_cast<std::size_t>(line - 1)];
  switch (step.just.kind) {
    case Justification::Kind::Premise: {
      if (sys.mode != CalculusMode::Consequence)
        return bad("premise steps are not available in theorem calculus " +
                   sys.name);
      int idx = step.just.premise_index;
      if (idx < 0 || idx >= static_cast<int>(p.premises.size()))
        return bad("premise index " + std::to_string(idx) +
                   " is out of range");
      if (step.formula != p.premises[static_cast<std::size_t>(idx)])
        return bad("line formula differs from premise " + std::to_string(idx));
      return {true, ""};
    }
    case Justification::Kind::Axiom: {
      AxiomId id = step.just.axiom;
      if (!sys.has_axiom(id))
        return bad("axiom " + to_string(id) + " is not part of system " +
                   sys.name);
      if (!match_axiom(id, step.formula))
        return bad("formula is not an instance of " + to_string(id));
      return {true, ""};
    }
    case Justification::Kind::Rule:
      return check_rule(sys, p, line);
  }
  return bad("unknown justification kind");
}

Verdict check_proof(const SystemSpec& sys, const Proof& p) {
  for (int line = 1; line <= static_cast<int>(p.steps.size()); ++line) {
    StepVerdict v = check_step(sys, p, line);
    if (!v.ok) return {false, StepFailure{line, v.reason}};
  }
  return {true, std::nullopt};
}

Verdict check_proof(const Proof& p) {
  auto sys = find_system(p.system);
  if (!sys) return {false, StepFailure{0, sys.error()}};
  return check_proof(*sys, p);
}

}  // namespace nelab
