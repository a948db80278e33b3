// Order-theoretic analysis: implication order, incompatibility closure,
// Dedekind-MacNeille completion, ortholattice diagnostics, residuation,
// the no-go properties, and DOT export.
#include "nelab/order.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <tuple>

namespace nelab {

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_to_vec(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

Result<Mask> vec_to_mask(const std::vector<int>& xs, int n) {
  Mask m = 0;
  for (int x : xs) {
    if (x < 0 || x >= n)
      return Result<Mask>::fail("element index " + std::to_string(x) +
                                " out of range 0.." + std::to_string(n - 1));
    m |= Mask{1} << x;
  }
  return Result<Mask>::ok(m);
}

std::string set_name(const std::vector<std::string>& names, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_to_vec(m)) {
    if (!first) out += ",";
    out += names[static_cast<std::size_t>(i)];
    first = false;
  }
  return out + "}";
}

// The carrier incompatibility relation as bit rows; row x = elements
// incompatible with x.
std::vector<Mask> perp_rows(const NModel& m) {
  std::vector<Mask> rows(static_cast<std::size_t>(m.n()), 0);
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y)
      if (m.perp2(x, y)) rows[static_cast<std::size_t>(x)] |= Mask{1} << y;
  return rows;
}

// The closure machinery assumes a symmetric irreflexive relation; returns a
// diagnostic when the model's carrier relation is outside that theory.
std::optional<std::string> closure_inapplicable(const NModel& m) {
  for (int x = 0; x < m.n(); ++x) {
    if (m.perp2(x, x))
      return "closure theory inapplicable: the carrier incompatibility "
             "relation is reflexive at " +
             m.elem_name(x) + " (" + m.elem_name(x) + " perp " +
             m.elem_name(x) + ")";
    for (int y = x + 1; y < m.n(); ++y)
      if (m.perp2(x, y) != m.perp2(y, x))
        return "closure theory inapplicable: the carrier incompatibility "
               "relation is not symmetric at (" +
               m.elem_name(x) + "," + m.elem_name(y) + ")";
  }
  return std::nullopt;
}

Mask perp_of_mask(const std::vector<Mask>& rows, Mask full, Mask x) {
  Mask out = full;
  for (int i : mask_to_vec(x)) out &= rows[static_cast<std::size_t>(i)];
  return out;
}

// --- Generic finite lattice scaffolding over a Poset -----------------------

struct LatticeOps {
  const Poset* p = nullptr;
  bool is_lattice = true;
  std::string why_not;           // first missing meet/join
  std::vector<int> meet, join;   // n*n when is_lattice
  int bottom = -1, top = -1;

  int mt(int x, int y) const {
    return meet[static_cast<std::size_t>(x * p->n() + y)];
  }
  int jn(int x, int y) const {
    return join[static_cast<std::size_t>(x * p->n() + y)];
  }
};

LatticeOps lattice_ops(const Poset& p) {
  LatticeOps l;
  l.p = &p;
  const int n = p.n();
  l.meet.assign(static_cast<std::size_t>(n) * n, -1);
  l.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n && l.is_lattice; ++x) {
    for (int y = 0; y < n && l.is_lattice; ++y) {
      int meet = -1, join = -1;
      for (int z = 0; z < n; ++z) {
        if (p.le(z, x) && p.le(z, y) && (meet < 0 || p.le(meet, z))) meet = z;
        if (p.le(x, z) && p.le(y, z) && (join < 0 || p.le(z, join))) join = z;
      }
      // The candidates above are maximal/minimal only if genuine; verify.
      if (meet >= 0)
        for (int z = 0; z < n; ++z)
          if (p.le(z, x) && p.le(z, y) && !p.le(z, meet)) meet = -1;
      if (join >= 0)
        for (int z = 0; z < n; ++z)
          if (p.le(x, z) && p.le(y, z) && !p.le(join, z)) join = -1;
      if (meet < 0 || join < 0) {
        l.is_lattice = false;
        l.why_not = std::string(meet < 0 ? "no meet" : "no join") +
                    " for (" + p.names[static_cast<std::size_t>(x)] + ", " +
                    p.names[static_cast<std::size_t>(y)] + ")";
        break;
      }
      l.meet[static_cast<std::size_t>(x * n + y)] = meet;
      l.join[static_cast<std::size_t>(x * n + y)] = join;
    }
  }
  if (l.is_lattice && n > 0) {
    l.bottom = 0;
    l.top = 0;
    for (int x = 1; x < n; ++x) {
      l.bottom = l.mt(l.bottom, x);
      l.top = l.jn(l.top, x);
    }
  }
  return l;
}

}  // namespace

// --- Poset validation ------------------------------------------------------

ValidationReport validate_poset(const Poset& p) {
  ValidationReport rep;
  const int n = p.n();
  if (p.leq.size() != static_cast<std::size_t>(n) * n ||
      p.star.size() != static_cast<std::size_t>(n)) {
    rep.add("shape", {}, "leq must be n*n and star n entries");
    return rep;
  }
  for (int x = 0; x < n; ++x)
    if (p.inv(x) < 0 || p.inv(x) >= n) {
      rep.add("shape", {p.names[static_cast<std::size_t>(x)]},
              "star image out of range");
      return rep;
    }
  auto nm = [&](int x) { return p.names[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < n; ++x)
    if (!p.le(x, x))
      rep.add("reflexivity", {nm(x)}, nm(x) + " <= " + nm(x) + " fails");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && p.le(x, y) && p.le(y, x))
        rep.add("antisymmetry", {nm(x), nm(y)},
                nm(x) + " <= " + nm(y) + " and conversely, but they differ");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.le(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (p.le(y, z) && !p.le(x, z))
          rep.add("transitivity", {nm(x), nm(y), nm(z)},
                  nm(x) + " <= " + nm(y) + " <= " + nm(z) + " but " + nm(x) +
                      " <= " + nm(z) + " fails");
    }
  for (int x = 0; x < n; ++x)
    if (p.inv(p.inv(x)) != x)
      rep.add("involution", {nm(x)}, nm(x) + "** = " + nm(p.inv(p.inv(x))) +
                                         " instead of " + nm(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.le(x, y) && !p.le(p.inv(y), p.inv(x)))
        rep.add("antitonicity", {nm(x), nm(y)},
                nm(x) + " <= " + nm(y) + " but " + nm(p.inv(y)) +
                    " <= " + nm(p.inv(x)) + " fails");
  return rep;
}

// --- Implication order from a model ----------------------------------------

Result<Poset> poset_from_model(const NModel& m) {
  const int n = m.n();
  Poset p;
  p.names = m.alg.names;
  p.star = m.alg.star_tab;
  p.leq.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      p.leq[static_cast<std::size_t>(x * n + y)] =
          m.perp2(x, m.alg.star(y)) ? 1 : 0;
  auto nm = [&](int x) { return m.elem_name(x); };
  for (int x = 0; x < n; ++x)
    if (!p.le(x, x))
      return Result<Poset>::fail("implication order is not reflexive: " +
                                 nm(x) + " is not incompatible with " + nm(x) +
                                 "*");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && p.le(x, y) && p.le(y, x))
        return Result<Poset>::fail(
            "implication order is not antisymmetric: " + nm(x) + " <= " +
            nm(y) + " and conversely (model condition (b) fails)");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.le(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (p.le(y, z) && !p.le(x, z))
          return Result<Poset>::fail(
              "implication order is not transitive: " + nm(x) + " <= " +
              nm(y) + " <= " + nm(z) + " but not " + nm(x) + " <= " + nm(z) +
              "; the model lacks the trans1 condition (witness " + nm(x) +
              "," + nm(y) + "," + nm(z) + ")");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.le(x, y) && !p.le(p.inv(y), p.inv(x)))
        return Result<Poset>::fail(
            "star is not antitone over the implication order (carrier "
            "incompatibility is not symmetric at (" +
            nm(x) + "," + nm(y) + "))");
  return Result<Poset>::ok(std::move(p));
}

std::vector<int> lower_bounds(const Poset& p, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int y = 0; y < p.n(); ++y) {
    bool all = true;
    for (int x : xs)
      if (!p.le(y, x)) {
        all = false;
        break;
      }
    if (all) out.push_back(y);
  }
  return out;
}

std::vector<int> upper_bounds(const Poset& p, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int y = 0; y < p.n(); ++y) {
    bool all = true;
    for (int x : xs)
      if (!p.le(x, y)) {
        all = false;
        break;
      }
    if (all) out.push_back(y);
  }
  return out;
}

// --- Incompatibility closure -----------------------------------------------

Result<std::vector<int>> perp_set(const NModel& m, const std::vector<int>& xs) {
  if (auto why = closure_inapplicable(m))
    return Result<std::vector<int>>::fail(*why);
  auto mask = vec_to_mask(xs, m.n());
  if (!mask) return Result<std::vector<int>>::fail(mask.error());
  const Mask full = (Mask{1} << m.n()) - 1;
  return Result<std::vector<int>>::ok(
      mask_to_vec(perp_of_mask(perp_rows(m), full, *mask)));
}

Result<std::vector<int>> perp_closure(const NModel& m,
                                      const std::vector<int>& xs) {
  if (auto why = closure_inapplicable(m))
    return Result<std::vector<int>>::fail(*why);
  auto mask = vec_to_mask(xs, m.n());
  if (!mask) return Result<std::vector<int>>::fail(mask.error());
  const Mask full = (Mask{1} << m.n()) - 1;
  auto rows = perp_rows(m);
  return Result<std::vector<int>>::ok(
      mask_to_vec(perp_of_mask(rows, full, perp_of_mask(rows, full, *mask))));
}

Result<SetLattice> closed_set_lattice(const NModel& m) {
  if (auto why = closure_inapplicable(m))
    return Result<SetLattice>::fail(*why);
  const int n = m.n();
  const Mask full = (Mask{1} << n) - 1;
  auto rows = perp_rows(m);
  std::vector<Mask> closed;
  for (Mask x = 0; x <= full; ++x)
    if (perp_of_mask(rows, full, perp_of_mask(rows, full, x)) == x)
      closed.push_back(x);
  SetLattice l;
  const int k = static_cast<int>(closed.size());
  l.poset.leq.assign(static_cast<std::size_t>(k) * k, 0);
  l.poset.star.resize(static_cast<std::size_t>(k));
  auto index_of = [&](Mask x) {
    return static_cast<int>(std::lower_bound(closed.begin(), closed.end(), x) -
                            closed.begin());
  };
  for (int i = 0; i < k; ++i) {
    l.poset.names.push_back(set_name(m.alg.names, closed[static_cast<std::size_t>(i)]));
    l.sets.push_back(mask_to_vec(closed[static_cast<std::size_t>(i)]));
    l.poset.star[static_cast<std::size_t>(i)] =
        index_of(perp_of_mask(rows, full, closed[static_cast<std::size_t>(i)]));
    for (int j = 0; j < k; ++j)
      l.poset.leq[static_cast<std::size_t>(i * k + j)] =
          (closed[static_cast<std::size_t>(i)] &
           ~closed[static_cast<std::size_t>(j)]) == 0
              ? 1
              : 0;
  }
  l.bottom = index_of(0);
  l.top = index_of(full);
  return Result<SetLattice>::ok(std::move(l));
}

Result<DMCompletion> dm_completion(const Poset& p) {
  auto rep = validate_poset(p);
  if (!rep.ok)
    return Result<DMCompletion>::fail(
        "input is not a poset with antitone involution: " + rep.to_string());
  const int n = p.n();
  if (n > 20)
    return Result<DMCompletion>::fail(
        "poset too large for exhaustive completion (n > 20)");
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  // Bit rows for the order: up[x] = elements above x, dn[x] = below x.
  std::vector<Mask> up(static_cast<std::size_t>(n), 0),
      dn(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.le(x, y)) up[static_cast<std::size_t>(x)] |= Mask{1} << y;
      if (p.le(y, x)) dn[static_cast<std::size_t>(x)] |= Mask{1} << y;
    }
  auto ub = [&](Mask x) {
    Mask out = full;
    for (int i : mask_to_vec(x)) out &= up[static_cast<std::size_t>(i)];
    return out;
  };
  auto lb = [&](Mask x) {
    Mask out = full;
    for (int i : mask_to_vec(x)) out &= dn[static_cast<std::size_t>(i)];
    return out;
  };
  auto starred = [&](Mask x) {
    Mask out = 0;
    for (int i : mask_to_vec(x)) out |= Mask{1} << p.inv(i);
    return out;
  };
  std::vector<Mask> closed;
  for (Mask x = 0;; ++x) {
    if (lb(ub(x)) == x) closed.push_back(x);
    if (x == full) break;
  }
  DMCompletion c;
  SetLattice& l = c.lattice;
  const int k = static_cast<int>(closed.size());
  l.poset.leq.assign(static_cast<std::size_t>(k) * k, 0);
  l.poset.star.resize(static_cast<std::size_t>(k));
  auto index_of = [&](Mask x) {
    auto it = std::lower_bound(closed.begin(), closed.end(), x);
    return it != closed.end() && *it == x
               ? static_cast<int>(it - closed.begin())
               : -1;
  };
  for (int i = 0; i < k; ++i) {
    Mask x = closed[static_cast<std::size_t>(i)];
    l.poset.names.push_back(set_name(p.names, x));
    l.sets.push_back(mask_to_vec(x));
    int st = index_of(lb(starred(x)));
    if (st < 0)
      return Result<DMCompletion>::fail(
          "involution image of " + set_name(p.names, x) +
          " is not a normal ideal; the input involution is not antitone");
    l.poset.star[static_cast<std::size_t>(i)] = st;
    for (int j = 0; j < k; ++j)
      l.poset.leq[static_cast<std::size_t>(i * k + j)] =
          (x & ~closed[static_cast<std::size_t>(j)]) == 0 ? 1 : 0;
  }
  l.bottom = index_of(lb(ub(0)));
  l.top = index_of(full);
  for (int x = 0; x < n; ++x)
    c.embed.push_back(index_of(lb(ub(Mask{1} << x))));
  return Result<DMCompletion>::ok(std::move(c));
}

// --- Structural diagnostics ------------------------------------------------

OrthoReport ortho_checks(const Poset& p) {
  OrthoReport r;
  auto rep = validate_poset(p);
  if (!rep.ok) {
    r.detail = "not a poset with antitone involution: " + rep.to_string();
    return r;
  }
  if (p.n() == 0) {
    r.detail = "empty carrier";
    return r;
  }
  auto nm = [&](int x) { return p.names[static_cast<std::size_t>(x)]; };
  LatticeOps l = lattice_ops(p);
  r.is_lattice = l.is_lattice;
  std::ostringstream out;
  if (!l.is_lattice) {
    out << "not a lattice: " << l.why_not;
    r.detail = out.str();
    return r;
  }
  r.is_ortholattice = true;
  for (int x = 0; x < p.n() && r.is_ortholattice; ++x) {
    if (l.mt(x, p.inv(x)) != l.bottom) {
      r.is_ortholattice = false;
      out << "complement law fails: " << nm(x) << " meet " << nm(x)
          << "* = " << nm(l.mt(x, p.inv(x))) << ", not the bottom element";
    } else if (l.jn(x, p.inv(x)) != l.top) {
      r.is_ortholattice = false;
      out << "complement law fails: " << nm(x) << " join " << nm(x)
          << "* = " << nm(l.jn(x, p.inv(x))) << ", not the top element";
    }
  }
  if (!r.is_ortholattice) {
    r.detail = out.str();
    return r;
  }
  r.is_orthomodular = true;
  for (int x = 0; x < p.n() && r.is_orthomodular; ++x)
    for (int y = 0; y < p.n(); ++y)
      if (x != y && p.le(x, y) && l.mt(p.inv(x), y) == l.bottom) {
        r.is_orthomodular = false;
        out << "not orthomodular: x = " << nm(x) << " <= y = " << nm(y)
            << " with x* meet y = bottom but x != y";
        break;
      }
  r.is_boolean = true;
  for (int x = 0; x < p.n() && r.is_boolean; ++x)
    for (int y = 0; y < p.n() && r.is_boolean; ++y)
      for (int z = 0; z < p.n(); ++z)
        if (l.mt(x, l.jn(y, z)) != l.jn(l.mt(x, y), l.mt(x, z))) {
          r.is_boolean = false;
          if (!out.str().empty()) out << "; ";
          out << "not distributive: x = " << nm(x) << ", y = " << nm(y)
              << ", z = " << nm(z);
          break;
        }
  if (r.is_orthomodular && r.is_boolean)
    out << "Boolean ortholattice (hence orthomodular)";
  else if (r.is_orthomodular)
    out << "; orthomodular but not Boolean";
  r.detail = out.str();
  return r;
}

ResiduationReport residuation_check(const NModel& m) {
  ResiduationReport r;
  const auto& a = m.alg;
  auto le = [&](int x, int y) { return m.perp2(x, a.star(y)); };
  auto nm = [&](int x) { return m.elem_name(x); };
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y)
      for (int z = 0; z < m.n(); ++z) {
        bool lhs = le(a.tensor(x, y), z);
        int hook = a.oplus(a.star(y), z);  // y (hook) z = y* oplus z
        bool rhs = le(x, hook);
        if (lhs != rhs) {
          r.ok = false;
          r.detail = "residuation fails at (" + nm(x) + "," + nm(y) + "," +
                     nm(z) + "): " + nm(x) + " tensor " + nm(y) +
                     (lhs ? " <= " : " !<= ") + nm(z) + " but " + nm(x) +
                     (rhs ? " <= " : " !<= ") + nm(y) + " hook " + nm(z);
          return r;
        }
        if (le(x, y)) {
          if (!le(a.tensor(x, z), a.tensor(y, z))) {
            r.ok = false;
            r.detail = "tensor is not monotone: " + nm(x) + " <= " + nm(y) +
                       " but not " + nm(x) + " tensor " + nm(z) + " <= " +
                       nm(y) + " tensor " + nm(z);
            return r;
          }
          if (!le(a.oplus(x, z), a.oplus(y, z))) {
            r.ok = false;
            r.detail = "oplus is not monotone: " + nm(x) + " <= " + nm(y) +
                       " but not " + nm(x) + " oplus " + nm(z) + " <= " +
                       nm(y) + " oplus " + nm(z);
            return r;
          }
        }
      }
  r.detail = "x tensor y <= z iff x <= y hook z over all " +
             std::to_string(m.n() * m.n() * m.n()) +
             " triples; tensor and oplus are monotone: the model carries a "
             "partially ordered commutative involutive residuated groupoid";
  return r;
}

NogoReport nogo_checks(const Poset& p) {
  NogoReport r;
  auto rep = validate_poset(p);
  if (!rep.ok) {
    r.pass = false;
    r.detail = "not a poset with antitone involution: " + rep.to_string();
    return r;
  }
  if (p.n() <= 1) {
    r.vacuous = true;
    r.detail = "degenerate poset (n <= 1): both properties hold vacuously";
    return r;
  }
  auto nm = [&](int x) { return p.names[static_cast<std::size_t>(x)]; };
  auto comparable = [&](int x, int y) { return p.le(x, y) || p.le(y, x); };
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y) {
      if (!p.le(x, y)) continue;
      for (int z = 0; z < p.n(); ++z)
        if (p.le(z, p.inv(x)) && p.le(z, y)) {
          r.pass = false;
          r.detail = "complement-comparable pair has a common lower bound: " +
                     nm(x) + " <= " + nm(y) + " yet " + nm(z) + " <= " +
                     nm(x) + "* and " + nm(z) + " <= " + nm(y);
          return r;
        }
    }
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y)
      for (int z = 0; z < p.n(); ++z) {
        if (!comparable(x, p.inv(z)) || !comparable(y, z)) continue;
        auto lo = lower_bounds(p, {x, y});
        auto hi = upper_bounds(p, {x, y});
        if (!lo.empty() || !hi.empty()) {
          r.pass = false;
          r.detail = "bounds survive a comparability pattern: " + nm(x) +
                     " comparable with " + nm(z) + "* and " + nm(y) +
                     " comparable with " + nm(z) + ", but {" + nm(x) + "," +
                     nm(y) + "} has " +
                     (!lo.empty() ? "lower bound " + nm(lo.front())
                                  : "upper bound " + nm(hi.front()));
          return r;
        }
      }
  r.detail = "no common bounds across complement-comparable patterns, over "
             "all triples";
  return r;
}

EmbeddingReport embedding_check(const NModel& m) {
  EmbeddingReport r;
  if (auto why = closure_inapplicable(m)) {
    r.ok = false;
    r.detail = *why;
    return r;
  }
  const int n = m.n();
  const Mask full = (Mask{1} << n) - 1;
  auto rows = perp_rows(m);
  auto cl = [&](int x) {
    return perp_of_mask(rows, full,
                        perp_of_mask(rows, full, Mask{1} << x));
  };
  auto nm = [&](int x) { return m.elem_name(x); };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool ord = m.perp2(x, m.alg.star(y));
      bool inc = (cl(x) & ~cl(y)) == 0;
      if (ord != inc) {
        r.ok = false;
        r.detail = "h: x -> {x}^perpperp is not an order embedding: " + nm(x) +
                   " perp " + nm(y) + "* is " + (ord ? "true" : "false") +
                   " but {" + nm(x) + "}^perpperp included in {" + nm(y) +
                   "}^perpperp is " + (inc ? "true" : "false") +
                   " (trans1 fails)";
        return r;
      }
    }
    Mask lhs = cl(m.alg.star(x));
    Mask rhs = perp_of_mask(rows, full, cl(x));
    if (lhs != rhs) {
      r.ok = false;
      r.detail = "h does not commute with the involutions at " + nm(x) +
                 ": {" + nm(x) + "*}^perpperp = " + set_name(m.alg.names, lhs) +
                 " but ({" + nm(x) +
                 "}^perpperp)^perp = " + set_name(m.alg.names, rhs);
      return r;
    }
  }
  r.detail = "h: x -> {x}^perpperp is an order- and star-preserving "
             "first-order embedding into the closed-set ortholattice";
  return r;
}

std::optional<std::vector<int>> ortho_isomorphism(const Poset& p,
                                                  const Poset& q) {
  if (p.n() != q.n()) return std::nullopt;
  const int n = p.n();
  // Invariant signature: (#below, #above, fixed-by-star) must match.
  auto signature = [](const Poset& r, int x) {
    int below = 0, above = 0;
    for (int y = 0; y < r.n(); ++y) {
      if (r.le(y, x)) ++below;
      if (r.le(x, y)) ++above;
    }
    return std::tuple<int, int, bool>(below, above, r.inv(x) == x);
  };
  std::vector<std::tuple<int, int, bool>> sp, sq;
  for (int x = 0; x < n; ++x) {
    sp.push_back(signature(p, x));
    sq.push_back(signature(q, x));
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto consistent = [&](int x, int y) {
    if (sp[static_cast<std::size_t>(x)] != sq[static_cast<std::size_t>(y)])
      return false;
    for (int x2 = 0; x2 < n; ++x2) {
      int y2 = f[static_cast<std::size_t>(x2)];
      if (y2 < 0) continue;
      if (p.le(x, x2) != q.le(y, y2) || p.le(x2, x) != q.le(y2, y))
        return false;
      if (p.inv(x) == x2 && q.inv(y) != y2) return false;
      if (q.inv(y) == y2 && p.inv(x) != x2) return false;
    }
    return true;
  };
  // Assign star-orbits together: placing x also places x*.
  std::function<bool(int)> place = [&](int x) -> bool {
    if (x == n) return true;
    if (f[static_cast<std::size_t>(x)] >= 0) return place(x + 1);
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)] || !consistent(x, y)) continue;
      int xs = p.inv(x), ys = q.inv(y);
      bool place_star = xs != x;
      if (place_star &&
          (used[static_cast<std::size_t>(ys)] || !consistent(xs, ys)))
        continue;
      f[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = 1;
      if (place_star) {
        f[static_cast<std::size_t>(xs)] = ys;
        used[static_cast<std::size_t>(ys)] = 1;
      }
      if (place(x + 1)) return true;
      f[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(y)] = 0;
      if (place_star) {
        f[static_cast<std::size_t>(xs)] = -1;
        used[static_cast<std::size_t>(ys)] = 0;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return f;
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box, style=rounded];\n";
  for (int x = 0; x < p.n(); ++x) {
    out << "  \"" << p.names[static_cast<std::size_t>(x)] << "\"";
    if (p.inv(x) == x) out << " [peripheries=2]";  // star-fixed elements
    out << ";\n";
  }
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y) {
      if (x == y || !p.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < p.n(); ++z)
        if (z != x && z != y && p.le(x, z) && p.le(z, y)) {
          cover = false;
          break;
        }
      if (cover)
        out << "  \"" << p.names[static_cast<std::size_t>(x)] << "\" -> \""
            << p.names[static_cast<std::size_t>(y)] << "\";\n";
    }
  for (int x = 0; x < p.n(); ++x) {
    int y = p.inv(x);
    if (x < y)
      out << "  \"" << p.names[static_cast<std::size_t>(x)] << "\" -> \""
          << p.names[static_cast<std::size_t>(y)]
          << "\" [dir=none, style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nelab
