#include "nelab/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <utility>

namespace nelab {

namespace {

constexpr int kMaxCarrier = 8;

std::string elem_letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

// All involutions of {0..n-1}, fewest fixed points first, lex tiebreak.
// Models with heavily paired stars are far more common, so trying those
// subtrees first makes countermodel hits come early.
std::vector<std::vector<int>> involutions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int x) -> void {
    while (x < n && cur[static_cast<std::size_t>(x)] >= 0) ++x;
    if (x == n) {
      out.push_back(cur);
      return;
    }
    cur[static_cast<std::size_t>(x)] = x;
    self(self, x + 1);
    cur[static_cast<std::size_t>(x)] = -1;
    for (int y = x + 1; y < n; ++y) {
      if (cur[static_cast<std::size_t>(y)] >= 0) continue;
      cur[static_cast<std::size_t>(x)] = y;
      cur[static_cast<std::size_t>(y)] = x;
      self(self, x + 1);
      cur[static_cast<std::size_t>(x)] = cur[static_cast<std::size_t>(y)] = -1;
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int fa = 0, fb = 0;
                     for (std::size_t i = 0; i < a.size(); ++i) {
                       fa += a[i] == static_cast<int>(i);
                       fb += b[i] == static_cast<int>(i);
                     }
                     if (fa != fb) return fa < fb;
                     return a < b;
                   });
  return out;
}

std::optional<std::string> check_seed_table(const std::vector<int>& t, int n,
                                            const char* what) {
  if (t.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    return std::string(what) + " seed must have " + std::to_string(n * n) +
           " entries";
  for (int v : t)
    if (v < -1 || v >= n)
      return std::string(what) + " seed entry out of range";
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int a = t[static_cast<std::size_t>(x * n + y)];
      int b = t[static_cast<std::size_t>(y * n + x)];
      if (a >= 0 && b >= 0 && a != b)
        return std::string(what) + " seed is not commutative at (" +
               elem_letter(x) + ", " + elem_letter(y) + ")";
    }
  return std::nullopt;
}

std::optional<std::string> check_spec(const SearchSpec& s) {
  if (s.carrier_size < 1) return "carrier size must be at least 1";
  if (s.carrier_size > kMaxCarrier)
    return "carrier sizes beyond " + std::to_string(kMaxCarrier) +
           " are not supported";
  if (s.limits.max_nodes == 0 || s.limits.max_models <= 0 ||
      s.limits.max_millis <= 0)
    return "budgets must be positive";
  const int n = s.carrier_size;
  if (s.seed_star) {
    const auto& t = *s.seed_star;
    if (t.size() != static_cast<std::size_t>(n))
      return "star seed must have " + std::to_string(n) + " entries";
    for (int v : t)
      if (v < -1 || v >= n) return "star seed entry out of range";
    for (int x = 0; x < n; ++x) {
      int y = t[static_cast<std::size_t>(x)];
      if (y >= 0 && t[static_cast<std::size_t>(y)] >= 0 &&
          t[static_cast<std::size_t>(y)] != x)
        return "star seed is not an involution at " + elem_letter(x);
    }
  }
  if (s.seed_circ)
    if (auto e = check_seed_table(*s.seed_circ, n, "circ")) return e;
  if (s.seed_tensor)
    if (auto e = check_seed_table(*s.seed_tensor, n, "tensor")) return e;
  return std::nullopt;
}

// Depth-first completion engine for one carrier size.
struct Engine {
  const SearchSpec* spec = nullptr;
  int n = 0;
  bool counter_mode = false;
  bool iso = false;
  bool use_seeds = false;

  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  int max_models = 0;
  std::chrono::steady_clock::time_point deadline;
  bool budget_stop = false;
  bool cap_stop = false;
  bool stopped = false;

  int star[kMaxCarrier] = {};
  int circ[kMaxCarrier][kMaxCarrier] = {};
  int tensor[kMaxCarrier][kMaxCarrier] = {};
  bool circ_fixed[kMaxCarrier][kMaxCarrier] = {};
  bool tensor_fixed[kMaxCarrier][kMaxCarrier] = {};

  std::vector<NModel> out;
  std::set<CanonicalForm> seen;
  std::optional<Countermodel> hit;

  bool tick() {
    ++nodes;
    if (nodes > max_nodes) {
      budget_stop = true;
      stopped = true;
      return false;
    }
    if ((nodes & 8191) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      budget_stop = true;
      stopped = true;
      return false;
    }
    return true;
  }

  int imp(int x, int y) const { return star[circ[x][star[y]]]; }
  int eqv(int x, int y) const { return tensor[imp(x, y)][imp(y, x)]; }
  int neq(int x, int y) const { return star[eqv(x, y)]; }

  bool exchange_ok_after(int x, int y) const {
    for (int z = 0; z < n; ++z) {
      if (tensor[x][z] >= 0 && circ[tensor[x][y]][z] != circ[tensor[x][z]][y])
        return false;
      if (tensor[y][z] >= 0 && circ[tensor[y][x]][z] != circ[tensor[y][z]][x])
        return false;
    }
    return true;
  }

  NModel build_model(int bits) const {
    NModel m;
    m.alg.names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m.alg.names.push_back(elem_letter(i));
    m.alg.star_tab.assign(star, star + n);
    m.alg.circ_tab.resize(static_cast<std::size_t>(n) * n);
    m.alg.tensor_tab.resize(static_cast<std::size_t>(n) * n);
    m.perp.resize(static_cast<std::size_t>(n) * n);
    m.perp_t.resize(static_cast<std::size_t>(n));
    m.perp_f.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      m.perp_t[static_cast<std::size_t>(x)] =
          static_cast<std::uint8_t>((bits >> x) & 1);
      m.perp_f[static_cast<std::size_t>(x)] =
          static_cast<std::uint8_t>((bits >> star[x]) & 1);
      for (int y = 0; y < n; ++y) {
        m.alg.circ_tab[static_cast<std::size_t>(x * n + y)] = circ[x][y];
        m.alg.tensor_tab[static_cast<std::size_t>(x * n + y)] = tensor[x][y];
        m.perp[static_cast<std::size_t>(x * n + y)] =
            static_cast<std::uint8_t>((bits >> circ[x][y]) & 1);
      }
    }
    return m;
  }

  std::vector<std::string> declared_for_emission() const {
    std::vector<std::string> d = {to_string(ClassTag::Nw)};
    for (ClassTag t : spec->classes) {
      std::string s = to_string(t);
      if (std::find(d.begin(), d.end(), s) == d.end()) d.push_back(s);
    }
    return d;
  }

  void on_survivor(int bits) {
    NModel m = build_model(bits);
    // Everything below re-checks the candidate through the public
    // validators; the bit-level screening above must never be the last word.
    if (!validate_nmodel(m).ok) return;
    for (ClassTag t : spec->classes)
      if (!class_check(m, t).holds) return;
    for (const HornCondition& h : spec->conditions)
      if (!check_horn(m, h).holds) return;
    if (counter_mode) {
      HoldsVerdict v = spec->target_formula
                           ? holds(m, *spec->target_formula)
                           : check_horn(m, *spec->target_rule);
      if (!v.holds && v.witness) {
        m.name = "countermodel-" + std::to_string(n);
        m.declared_classes = declared_for_emission();
        hit = Countermodel{std::move(m), *v.witness, v.detail};
        stopped = true;
      }
      return;
    }
    if (iso) {
      CanonicalForm cf = canonical_form(m);
      if (!seen.insert(cf).second) return;
      Result<NModel> rep = model_from_form(
          cf, "model-" + std::to_string(n) + "-" +
                  std::to_string(out.size() + 1));
      if (!rep.has_value() || !validate_nmodel(*rep).ok) return;
      (*rep).declared_classes = declared_for_emission();
      out.push_back(std::move(*rep));
    } else {
      m.name =
          "model-" + std::to_string(n) + "-" + std::to_string(out.size() + 1);
      m.declared_classes = declared_for_emission();
      out.push_back(std::move(m));
    }
    if (static_cast<int>(out.size()) >= max_models) {
      cap_stop = true;
      stopped = true;
    }
  }

  void complete() {
    // Required perp-t positions: (a) x perp x*, (f) (x o y*)* perp (x o y)*,
    // (h) the pairwise-distinctness / transitivity-chain pairs.  All three
    // only say "this position must be incompatible with t", so they fold
    // into one bit mask.
    const int full = (1 << n) - 1;
    int need1 = 0;
    for (int x = 0; x < n; ++x) need1 |= 1 << circ[x][star[x]];
    for (int x = 0; x < n && need1 != full; ++x)
      for (int y = 0; y < n; ++y)
        need1 |= 1 << circ[star[circ[x][star[y]]]][star[circ[x][y]]];
    for (int x = 0; x < n && need1 != full; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int lhs = tensor[tensor[neq(x, y)][neq(x, z)]][neq(y, z)];
          int rhs = star[imp(imp(x, y), imp(imp(y, z), imp(x, z)))];
          need1 |= 1 << circ[lhs][rhs];
        }
    for (int bits = 0; bits <= full && !stopped; ++bits) {
      if ((bits & need1) != need1) continue;
      if (!tick()) return;
      auto pt = [&](int v) { return (bits >> v) & 1; };
      auto p2 = [&](int x, int y) { return pt(circ[x][y]); };
      auto pf = [&](int x) { return pt(star[x]); };
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) {
          if (x != y && p2(x, star[y]) && p2(y, star[x])) ok = false;  // (b)
          if ((pf(x) & pf(y)) != pf(tensor[x][y])) ok = false;        // (e)
          if (p2(x, y) && pf(x) && !pt(y)) ok = false;                // (g)
        }
      if (ok) on_survivor(bits);
    }
  }

  void tensor_cells(int x, int y) {
    if (stopped) return;
    if (y >= n) {
      ++x;
      y = x;
    }
    if (x >= n) {
      complete();
      return;
    }
    if (tensor_fixed[x][y]) {
      if (exchange_ok_after(x, y)) tensor_cells(x, y + 1);
      return;
    }
    for (int v = 0; v < n && !stopped; ++v) {
      if (!tick()) return;
      tensor[x][y] = tensor[y][x] = v;
      if (exchange_ok_after(x, y)) tensor_cells(x, y + 1);
      tensor[x][y] = tensor[y][x] = -1;
    }
  }

  void circ_cells(int x, int y) {
    if (stopped) return;
    if (y >= n) {
      ++x;
      y = x;
    }
    if (x >= n) {
      tensor_cells(0, 0);
      return;
    }
    if (circ_fixed[x][y]) {
      circ_cells(x, y + 1);
      return;
    }
    for (int v = 0; v < n && !stopped; ++v) {
      if (!tick()) return;
      circ[x][y] = circ[y][x] = v;
      circ_cells(x, y + 1);
      circ[x][y] = circ[y][x] = -1;
    }
  }

  void run() {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        circ[i][j] = tensor[i][j] = -1;
        circ_fixed[i][j] = tensor_fixed[i][j] = false;
      }
    const std::vector<int>* ss =
        use_seeds && spec->seed_star ? &*spec->seed_star : nullptr;
    if (use_seeds && spec->seed_circ)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int v = (*spec->seed_circ)[static_cast<std::size_t>(x * n + y)];
          if (v >= 0) {
            circ[x][y] = circ[y][x] = v;
            circ_fixed[x][y] = circ_fixed[y][x] = true;
          }
        }
    if (use_seeds && spec->seed_tensor)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int v = (*spec->seed_tensor)[static_cast<std::size_t>(x * n + y)];
          if (v >= 0) {
            tensor[x][y] = tensor[y][x] = v;
            tensor_fixed[x][y] = tensor_fixed[y][x] = true;
          }
        }
    for (const std::vector<int>& inv : involutions(n)) {
      if (stopped) break;
      if (ss) {
        bool fits = true;
        for (int i = 0; i < n && fits; ++i)
          if ((*ss)[static_cast<std::size_t>(i)] >= 0 &&
              inv[static_cast<std::size_t>(i)] !=
                  (*ss)[static_cast<std::size_t>(i)])
            fits = false;
        if (!fits) continue;
      }
      if (!tick()) return;
      for (int i = 0; i < n; ++i) star[i] = inv[static_cast<std::size_t>(i)];
      circ_cells(0, 0);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const NModel& m) {
  const int n = m.n();
  const std::size_t un = static_cast<std::size_t>(n);
  if (n < 1 || m.alg.star_tab.size() != un ||
      m.alg.circ_tab.size() != un * un || m.alg.tensor_tab.size() != un * un ||
      m.perp.size() != un * un || m.perp_t.size() != un ||
      m.perp_f.size() != un)
    return {};
  const std::size_t len = 1 + un + 3 * un * un + 2 * un;
  std::vector<int> perm(un);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> inv(un);
  CanonicalForm best;
  CanonicalForm cur(len);
  do {
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::size_t pos = 0;
    cur[pos++] = n;
    for (int j = 0; j < n; ++j)
      cur[pos++] = perm[static_cast<std::size_t>(
          m.alg.star_tab[static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])])];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        cur[pos++] = perm[static_cast<std::size_t>(m.alg.circ(
            inv[static_cast<std::size_t>(j)], inv[static_cast<std::size_t>(k)]))];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        cur[pos++] = perm[static_cast<std::size_t>(m.alg.tensor(
            inv[static_cast<std::size_t>(j)], inv[static_cast<std::size_t>(k)]))];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        cur[pos++] = m.perp2(inv[static_cast<std::size_t>(j)],
                             inv[static_cast<std::size_t>(k)])
                         ? 1
                         : 0;
    for (int j = 0; j < n; ++j)
      cur[pos++] = m.perpt(inv[static_cast<std::size_t>(j)]) ? 1 : 0;
    for (int j = 0; j < n; ++j)
      cur[pos++] = m.perpf(inv[static_cast<std::size_t>(j)]) ? 1 : 0;
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Result<NModel> model_from_form(const CanonicalForm& form, std::string name) {
  if (form.empty()) return Result<NModel>::fail("empty model encoding");
  const int n = form[0];
  if (n < 1 || n > 26) return Result<NModel>::fail("bad carrier size in encoding");
  const std::size_t un = static_cast<std::size_t>(n);
  if (form.size() != 1 + un + 3 * un * un + 2 * un)
    return Result<NModel>::fail("model encoding has the wrong length");
  NModel m;
  m.name = std::move(name);
  std::size_t pos = 1;
  for (int i = 0; i < n; ++i) m.alg.names.push_back(elem_letter(i));
  auto take_op = [&](std::vector<int>& tab, std::size_t count) -> bool {
    tab.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      int v = form[pos++];
      if (v < 0 || v >= n) return false;
      tab.push_back(v);
    }
    return true;
  };
  auto take_bits = [&](std::vector<std::uint8_t>& tab,
                       std::size_t count) -> bool {
    tab.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      int v = form[pos++];
      if (v != 0 && v != 1) return false;
      tab.push_back(static_cast<std::uint8_t>(v));
    }
    return true;
  };
  if (!take_op(m.alg.star_tab, un) || !take_op(m.alg.circ_tab, un * un) ||
      !take_op(m.alg.tensor_tab, un * un) || !take_bits(m.perp, un * un) ||
      !take_bits(m.perp_t, un) || !take_bits(m.perp_f, un))
    return Result<NModel>::fail("model encoding entry out of range");
  return Result<NModel>::ok(std::move(m));
}

Result<SearchResult> enumerate_models(const SearchSpec& spec) {
  if (auto e = check_spec(spec)) return Result<SearchResult>::fail(*e);
  Engine eng;
  eng.spec = &spec;
  eng.n = spec.carrier_size;
  eng.counter_mode = false;
  eng.iso = spec.iso_prune.value_or(true);
  eng.use_seeds = true;
  eng.max_nodes = spec.limits.max_nodes;
  eng.max_models = spec.limits.max_models;
  eng.deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(spec.limits.max_millis);
  eng.run();
  SearchResult res;
  res.models = std::move(eng.out);
  res.nodes = eng.nodes;
  res.exhausted = !eng.budget_stop && !eng.cap_stop;
  return Result<SearchResult>::ok(std::move(res));
}

Result<CountermodelResult> find_countermodel(const SearchSpec& spec) {
  if (auto e = check_spec(spec)) return Result<CountermodelResult>::fail(*e);
  const bool has_formula = spec.target_formula.has_value();
  const bool has_rule = spec.target_rule.has_value();
  if (has_formula == has_rule)
    return Result<CountermodelResult>::fail(
        "exactly one target (formula or rule) is required");
  if (spec.seed_star || spec.seed_circ || spec.seed_tensor)
    return Result<CountermodelResult>::fail(
        "seed tables are only supported by enumeration");
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(spec.limits.max_millis);
  CountermodelResult res;
  for (int size = 1; size <= spec.carrier_size; ++size) {
    if (res.nodes >= spec.limits.max_nodes)
      return Result<CountermodelResult>::ok(std::move(res));
    Engine eng;
    eng.spec = &spec;
    eng.n = size;
    eng.counter_mode = true;
    eng.iso = false;  // first hit wins
    eng.use_seeds = false;
    eng.max_nodes = spec.limits.max_nodes - res.nodes;
    eng.max_models = spec.limits.max_models;
    eng.deadline = deadline;
    eng.run();
    res.nodes += eng.nodes;
    if (eng.hit) {
      res.found = std::move(eng.hit);
      return Result<CountermodelResult>::ok(std::move(res));
    }
    if (eng.budget_stop) return Result<CountermodelResult>::ok(std::move(res));
    res.sizes_completed = size;
  }
  res.exhausted = true;
  return Result<CountermodelResult>::ok(std::move(res));
}

}  // namespace nelab
