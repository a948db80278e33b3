// Validation of incompatibility models, class tags, and evaluation.
#include "nelab/model.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

namespace nelab {

std::optional<int> FiniteAlgebra::index_of(std::string_view name) const {
  for (int i = 0; i < n(); ++i)
    if (names[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

void ValidationReport::add(std::string law, std::vector<std::string> witness,
                          std::string detail) {
  ok = false;
  violations.push_back(
      {std::move(law), std::move(witness), std::move(detail)});
}

std::string ValidationReport::to_string() const {
  if (ok) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.law << " fails";
    if (!v.witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) os << ",";
        os << v.witness[i];
      }
      os << ")";
    }
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

// --- Algebra validation ----------------------------------------------------

namespace {

bool tables_well_formed(const FiniteAlgebra& a, ValidationReport& r) {
  const std::size_t n = a.names.size();
  if (n == 0) {
    r.add("carrier", {}, "carrier must be non-empty");
    return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.names[i] == a.names[j]) {
        r.add("carrier", {a.names[i]}, "duplicate element name");
        return false;
      }
  if (a.star_tab.size() != n || a.tensor_tab.size() != n * n ||
      a.circ_tab.size() != n * n) {
    r.add("tables", {}, "operation table sizes do not match the carrier");
    return false;
  }
  auto in_range = [&](int v) { return v >= 0 && v < static_cast<int>(n); };
  for (int v : a.star_tab)
    if (!in_range(v)) {
      r.add("tables", {}, "star table entry out of range");
      return false;
    }
  for (int v : a.tensor_tab)
    if (!in_range(v)) {
      r.add("tables", {}, "tensor table entry out of range");
      return false;
    }
  for (int v : a.circ_tab)
    if (!in_range(v)) {
      r.add("tables", {}, "circ table entry out of range");
      return false;
    }
  return true;
}

}  // namespace

ValidationReport validate_algebra(const FiniteAlgebra& a, bool require_assoc) {
  ValidationReport r;
  if (!tables_well_formed(a, r)) return r;
  const int n = a.n();
  auto nm = [&](int x) { return a.names[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < n; ++x) {
    if (a.star(a.star(x)) != x)
      r.add("star-involution", {nm(x)},
            nm(x) + "** = " + nm(a.star(a.star(x))));
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (a.tensor(x, y) != a.tensor(y, x))
        r.add("tensor-commutativity", {nm(x), nm(y)},
              nm(x) + " & " + nm(y) + " = " + nm(a.tensor(x, y)) + " but " +
                  nm(y) + " & " + nm(x) + " = " + nm(a.tensor(y, x)));
      if (a.circ(x, y) != a.circ(y, x))
        r.add("circ-commutativity", {nm(x), nm(y)},
              nm(x) + " o " + nm(y) + " = " + nm(a.circ(x, y)) + " but " +
                  nm(y) + " o " + nm(x) + " = " + nm(a.circ(y, x)));
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (a.circ(a.tensor(x, y), z) != a.circ(a.tensor(x, z), y))
          r.add("exchange", {nm(x), nm(y), nm(z)},
                "(x & y) o z = " + nm(a.circ(a.tensor(x, y), z)) +
                    " but (x & z) o y = " + nm(a.circ(a.tensor(x, z), y)));
        if (require_assoc &&
            a.tensor(a.tensor(x, y), z) != a.tensor(x, a.tensor(y, z)))
          r.add("tensor-associativity", {nm(x), nm(y), nm(z)},
                "(x & y) & z = " + nm(a.tensor(a.tensor(x, y), z)) +
                    " but x & (y & z) = " + nm(a.tensor(x, a.tensor(y, z))));
      }
  return r;
}

// --- Model validation ------------------------------------------------------

ValidationReport validate_nmodel(const NModel& m, bool require_assoc) {
  ValidationReport r = validate_algebra(m.alg, require_assoc);
  const int n = m.n();
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (m.perp.size() != nn || m.perp_t.size() != static_cast<std::size_t>(n) ||
      m.perp_f.size() != static_cast<std::size_t>(n)) {
    r.add("incompat", {}, "incompatibility tables do not match the carrier");
    return r;
  }
  if (!r.ok) return r;

  const FiniteAlgebra& a = m.alg;
  auto nm = [&](int x) { return m.elem_name(x); };

  // Symmetry of the carrier part is a consequence of the conditions but is
  // checked on the input rather than assumed.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (m.perp2(x, y) != m.perp2(y, x))
        r.add("perp-symmetry", {nm(x), nm(y)},
              "incompatibility listed in one direction only");

  for (int x = 0; x < n; ++x) {
    if (!m.perp2(x, a.star(x)))
      r.add("(a)", {nm(x)}, "x is not incompatible with x*");
    if (m.perpt(x) != m.perpf(a.star(x)))
      r.add("(d)", {nm(x)}, "x perp t differs from x* perp f");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && m.perp2(x, a.star(y)) && m.perp2(y, a.star(x)))
        r.add("(b)", {nm(x), nm(y)},
              "x perp y* and y perp x* for distinct x, y");
      if (m.perp2(x, y) != m.perpt(a.circ(x, y)))
        r.add("(c)", {nm(x), nm(y)},
              "x perp y differs from (x o y) perp t");
      if ((m.perpf(x) && m.perpf(y)) != m.perpf(a.tensor(x, y)))
        r.add("(e)", {nm(x), nm(y)},
              "x perp f and y perp f differs from (x & y) perp f");
      if (!m.perp2(a.star(a.circ(x, a.star(y))), a.star(a.circ(x, y))))
        r.add("(f)", {nm(x), nm(y)},
              "(x o y*)* is not incompatible with (x o y)*");
      if (m.perp2(x, y) && m.perpf(x) && !m.perpt(y))
        r.add("(g)", {nm(x), nm(y)},
              "x perp y and x perp f but y is not perp t");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // pairwise inequivalence of x,y,z perp the starred transitivity chain
        int lhs = a.tensor(a.tensor(a.neq(x, y), a.neq(x, z)), a.neq(y, z));
        int rhs = a.star(a.imp(a.imp(x, y), a.imp(a.imp(y, z), a.imp(x, z))));
        if (!m.perp2(lhs, rhs))
          r.add("(h)", {nm(x), nm(y), nm(z)},
                "pairwise-distinctness term is not incompatible with the "
                "negated transitivity chain");
      }
  return r;
}

// --- Class tags ------------------------------------------------------------

std::string to_string(ClassTag t) {
  switch (t) {
    case ClassTag::Nw: return "Nw";
    case ClassTag::NAssoc: return "assoc";
    case ClassTag::I: return "i";
    case ClassTag::I2: return "i2";
    case ClassTag::SCond: return "s";
    case ClassTag::Di: return "di";
    case ClassTag::Trans1: return "trans1";
    case ClassTag::Regular: return "regular";
    case ClassTag::Full: return "full";
    case ClassTag::Trivial: return "trivial";
  }
  return "?";
}

std::optional<ClassTag> class_tag_from_string(std::string_view s) {
  for (ClassTag t : all_class_tags())
    if (to_string(t) == s) return t;
  return std::nullopt;
}

const std::vector<ClassTag>& all_class_tags() {
  static const std::vector<ClassTag> tags = {
      ClassTag::Nw,      ClassTag::NAssoc, ClassTag::I,
      ClassTag::I2,      ClassTag::SCond,  ClassTag::Di,
      ClassTag::Trans1,  ClassTag::Regular, ClassTag::Full,
      ClassTag::Trivial};
  return tags;
}

ClassCheck class_check(const NModel& m, ClassTag tag) {
  const FiniteAlgebra& a = m.alg;
  const int n = m.n();
  auto nm = [&](int x) { return m.elem_name(x); };
  switch (tag) {
    case ClassTag::Nw: {
      auto r = validate_nmodel(m);
      return {r.ok, r.ok ? "" : r.to_string()};
    }
    case ClassTag::NAssoc: {
      auto r = validate_nmodel(m, /*require_assoc=*/true);
      return {r.ok, r.ok ? "" : r.to_string()};
    }
    case ClassTag::I: {
      // x perp x is only allowed in a one-element model.
      for (int x = 0; x < n; ++x)
        if (m.perp2(x, x) && n > 1)
          return {false, "self-incompatible " + nm(x) +
                             " in a model with more than one element"};
      return {true, ""};
    }
    case ClassTag::I2: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (m.perp2(x, a.star(y)) && m.perp2(x, y) && n > 1)
            return {false, nm(x) + " perp " + nm(y) + "* and perp " + nm(y) +
                               " in a model with more than one element"};
      return {true, ""};
    }
    case ClassTag::SCond: {
      for (int x = 0; x < n; ++x)
        if (m.perpt(x) && m.perpf(x)) {
          for (int z = 0; z < n; ++z)
            if (!m.perpf(z))
              return {false, nm(x) + " is perp both t and f, yet " + nm(z) +
                                 " is not perp f"};
          return {true, nm(x) + " is perp both poles and everything is "
                                "designated"};
        }
      return {true, "no element is perp both t and f"};
    }
    case ClassTag::Di: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (m.perpf(x) && !m.perpf(a.oplus(x, y)))
            return {false, nm(x) + " perp f but " + nm(x) + " (+) " + nm(y) +
                               " = " + nm(a.oplus(x, y)) + " is not"};
      return {true, ""};
    }
    case ClassTag::Trans1: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (m.perp2(x, a.star(y)) && m.perp2(y, a.star(z)) &&
                !m.perp2(x, a.star(z)))
              return {false, "x=" + nm(x) + ", y=" + nm(y) + ", z=" + nm(z) +
                                 ": x perp y* and y perp z* but not "
                                 "x perp z*"};
      return {true, ""};
    }
    case ClassTag::Regular: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          bool neq_desig = m.perpf(a.neq(x, y));
          if ((x != y) != neq_desig)
            return {false,
                    "x=" + nm(x) + ", y=" + nm(y) + ": distinctness is " +
                        (x != y ? "true" : "false") +
                        " but the inequivalence term evaluates to " +
                        nm(a.neq(x, y)) +
                        (neq_desig ? " (designated)" : " (undesignated)")};
        }
      return {true, ""};
    }
    case ClassTag::Full: {
      ClassCheck s = class_check(m, ClassTag::SCond);
      if (!s.holds) return {false, "s-condition fails: " + s.detail};
      for (int x = 0; x < n; ++x)
        if (!m.perpf(x) && !m.perpt(x))
          return {false, nm(x) + " is perp neither t nor f"};
      return {true, ""};
    }
    case ClassTag::Trivial:
      return {n == 1, n == 1 ? "" : "carrier has more than one element"};
  }
  return {false, "unknown tag"};
}

// --- Evaluation ------------------------------------------------------------

std::string assignment_to_string(const NModel& m, const Assignment& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, val] : a) {
    if (!first) os << ", ";
    first = false;
    os << var << " := " << m.elem_name(val);
  }
  return os.str();
}

CompiledTerm CompiledTerm::compile(const Formula& f,
                                   const std::vector<std::string>& var_order) {
  CompiledTerm t;
  t.num_vars_ = static_cast<int>(var_order.size());
  // Post-order flattening.
  struct Frame { const Formula* f; int next_child; };
  std::vector<Frame> stack{{&f, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_child < top.f->arity()) {
      const Formula* c = &top.f->child(top.next_child++);
      stack.push_back({c, 0});
      continue;
    }
    const Formula& g = *top.f;
    switch (g.kind()) {
      case Formula::Kind::Var: {
        auto it = std::find(var_order.begin(), var_order.end(), g.var_name());
        assert(it != var_order.end() && "unassigned variable");
        t.ops_.push_back(
            {0, static_cast<int>(it - var_order.begin())});
        break;
      }
      case Formula::Kind::Star: t.ops_.push_back({1, 0}); break;
      case Formula::Kind::Tensor: t.ops_.push_back({2, 0}); break;
      case Formula::Kind::Circ: t.ops_.push_back({3, 0}); break;
    }
    stack.pop_back();
  }
  return t;
}

int CompiledTerm::eval(const FiniteAlgebra& a, const int* env) const {
  int stack[64] = {0};
  int sp = 0;
  std::vector<int> big;  // spill storage for unusually deep terms
  auto push = [&](int v) {
    if (sp < 64) stack[sp++] = v;
    else { big.push_back(v); ++sp; }
  };
  auto pop = [&]() {
    --sp;
    if (sp < 64) return stack[sp];
    int v = big.back();
    big.pop_back();
    return v;
  };
  for (const Op& op : ops_) {
    switch (op.code) {
      case 0: push(env[op.idx]); break;
      case 1: push(a.star(pop())); break;
      case 2: {
        int y = pop(), x = pop();
        push(a.tensor(x, y));
        break;
      }
      default: {
        int y = pop(), x = pop();
        push(a.circ(x, y));
        break;
      }
    }
  }
  assert(sp == 1);
  return stack[0];
}

Result<int> evaluate(const NModel& m, const Formula& f, const Assignment& a) {
  for (const auto& [var, val] : a)
    if (val < 0 || val >= m.n())
      return Result<int>::fail("assignment maps " + var +
                               " outside the carrier");
  std::function<Result<int>(const Formula&)> go =
      [&](const Formula& g) -> Result<int> {
    switch (g.kind()) {
      case Formula::Kind::Var: {
        auto it = a.find(g.var_name());
        if (it == a.end())
          return Result<int>::fail("variable '" + g.var_name() +
                                   "' is not assigned");
        return Result<int>::ok(it->second);
      }
      case Formula::Kind::Star: {
        auto v = go(g.child(0));
        if (!v) return v;
        return Result<int>::ok(m.alg.star(*v));
      }
      case Formula::Kind::Tensor:
      case Formula::Kind::Circ: {
        auto x = go(g.left());
        if (!x) return x;
        auto y = go(g.right());
        if (!y) return y;
        return Result<int>::ok(g.is_tensor() ? m.alg.tensor(*x, *y)
                                             : m.alg.circ(*x, *y));
      }
    }
    return Result<int>::fail("unreachable");
  };
  return go(f);
}

namespace {

// Iterate all assignments of `vars` into 0..n-1, calling fn(env) until it
// returns false; returns the env of the first false, if any.
template <typename Fn>
std::optional<std::vector<int>> first_falsified(int n, int k, Fn&& fn) {
  std::vector<int> env(static_cast<std::size_t>(k), 0);
  for (;;) {
    if (!fn(env.data())) return env;
    int i = k - 1;
    while (i >= 0 && env[static_cast<std::size_t>(i)] == n - 1) {
      env[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return std::nullopt;
    ++env[static_cast<std::size_t>(i)];
  }
}

Assignment to_assignment(const std::vector<std::string>& vars,
                         const std::vector<int>& env) {
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], env[i]);
  return a;
}

}  // namespace

HoldsVerdict holds(const NModel& m, const Formula& f) {
  return check_horn(m, HornCondition{{}, f});
}

HoldsVerdict consequence(const NModel& m, const std::vector<Formula>& premises,
                         const Formula& conclusion) {
  return check_horn(m, HornCondition{premises, conclusion});
}

HoldsVerdict check_horn(const NModel& m, const HornCondition& h) {
  // Shared variable order across premises and conclusion.
  std::set<std::string> vset;
  for (const auto& p : h.premises)
    for (auto& v : variables(p)) vset.insert(v);
  for (auto& v : variables(h.conclusion)) vset.insert(v);
  std::vector<std::string> vars(vset.begin(), vset.end());

  std::vector<CompiledTerm> prem;
  prem.reserve(h.premises.size());
  for (const auto& p : h.premises)
    prem.push_back(CompiledTerm::compile(p, vars));
  CompiledTerm conc = CompiledTerm::compile(h.conclusion, vars);

  auto hit = first_falsified(
      m.n(), static_cast<int>(vars.size()), [&](const int* env) {
        for (const auto& p : prem)
          if (!m.perpf(p.eval(m.alg, env))) return true;  // premise fails
        return m.perpf(conc.eval(m.alg, env));
      });
  if (!hit) return {true, std::nullopt, ""};
  Assignment a = to_assignment(vars, *hit);
  int value = *evaluate(m, h.conclusion, a);
  std::string detail = "falsified under " + assignment_to_string(m, a) +
                       "; conclusion evaluates to " + m.elem_name(value) +
                       ", which is not designated";
  return {false, std::move(a), std::move(detail)};
}

std::vector<int> designated(const NModel& m) {
  std::vector<int> out;
  for (int x = 0; x < m.n(); ++x)
    if (m.perpf(x)) out.push_back(x);
  return out;
}

}  // namespace nelab
