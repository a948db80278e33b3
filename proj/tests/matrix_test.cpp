// Matrix-bridge suite: designated matrices, partition enumeration, the
// Leibniz congruence by brute force and by the arrow characterization, the
// NeL-filter closure clauses, the filter-induced incompatibility relation,
// and the matrix <-> model roundtrip.
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nelab/corpus.hpp"
#include "nelab/matrix.hpp"
#include "nelab/model.hpp"

using namespace nelab;

namespace {

const NModel& model(const std::string& name) {
  const NModel* m = corpus::find_model(name);
  REQUIRE_MESSAGE(m != nullptr, "no corpus model " << name);
  return *m;
}

// A matrix over a corpus model's algebra with the filter given by names.
Matrix matrix_over(const std::string& model_name,
                   const std::vector<std::string>& filter) {
  const NModel& m = model(model_name);
  Matrix mat{m.alg, {}};
  for (const std::string& f : filter) {
    auto idx = m.alg.index_of(f);
    REQUIRE_MESSAGE(idx.has_value(), "no element " << f);
    mat.filter.push_back(*idx);
  }
  std::sort(mat.filter.begin(), mat.filter.end());
  return mat;
}

std::vector<std::string> filter_names(const NModel& m, const Matrix& mat) {
  std::vector<std::string> out;
  for (int v : mat.filter) out.push_back(m.elem_name(v));
  return out;
}

// M2 with the incompatibility pair (b, d) dropped in both directions; the
// designated set is untouched, so the stored relation no longer matches the
// one its filter induces.
NModel mutated_m2() {
  NModel m = model("M2");
  int b = *m.alg.index_of("b");
  int d = *m.alg.index_of("d");
  m.perp[static_cast<std::size_t>(b * m.n() + d)] = 0;
  m.perp[static_cast<std::size_t>(d * m.n() + b)] = 0;
  m.declared_classes.clear();
  m.name = "M2-minus-bd";
  return m;
}

// The direct square of an algebra, componentwise operations, elements named
// "xy" for the pair (x, y).
FiniteAlgebra square_of(const FiniteAlgebra& a) {
  const int n = a.n();
  FiniteAlgebra sq;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      sq.names.push_back(a.names[static_cast<std::size_t>(x)] +
                         a.names[static_cast<std::size_t>(y)]);
  const int m = n * n;
  auto pair = [n](int idx) { return std::pair<int, int>{idx / n, idx % n}; };
  sq.star_tab.resize(static_cast<std::size_t>(m));
  sq.tensor_tab.resize(static_cast<std::size_t>(m) * m);
  sq.circ_tab.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    auto [x1, x2] = pair(i);
    sq.star_tab[static_cast<std::size_t>(i)] =
        a.star(x1) * n + a.star(x2);
    for (int j = 0; j < m; ++j) {
      auto [y1, y2] = pair(j);
      sq.tensor_tab[static_cast<std::size_t>(i * m + j)] =
          a.tensor(x1, y1) * n + a.tensor(x2, y2);
      sq.circ_tab[static_cast<std::size_t>(i * m + j)] =
          a.circ(x1, y1) * n + a.circ(x2, y2);
    }
  }
  return sq;
}

}  // namespace

TEST_CASE("partition enumeration matches the Bell numbers") {
  const std::vector<std::size_t> bell = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    auto parts = enumerate_partitions(n);
    CHECK_MESSAGE(parts.size() == bell[static_cast<std::size_t>(n - 1)],
                  "Bell(" << n << ")");
  }
  CHECK(enumerate_partitions(0).empty());

  auto parts = enumerate_partitions(4);
  // Lexicographic restricted-growth order: one block first, identity last.
  CHECK(parts.front().blocks() == 1);
  CHECK(parts.back().is_identity());
  std::set<std::vector<int>> seen;
  for (const auto& p : parts) {
    // Canonical form: first entry 0, each entry at most one above the
    // running maximum.
    REQUIRE(p.block_of.size() == 4);
    CHECK(p.block_of[0] == 0);
    int mx = 0;
    for (int v : p.block_of) {
      CHECK(v <= mx + 1);
      mx = std::max(mx, v);
    }
    seen.insert(p.block_of);
  }
  CHECK(seen.size() == parts.size());
}

TEST_CASE("congruence canonical form, containment, and rendering") {
  Congruence c = Congruence::canonical({5, 2, 5, 7});
  CHECK(c.block_of == std::vector<int>{0, 1, 0, 2});
  CHECK(c.blocks() == 3);
  CHECK(c.same(0, 2));
  CHECK_FALSE(c.same(0, 1));
  CHECK_FALSE(c.is_identity());

  Congruence id3 = Congruence::identity(3);
  CHECK(id3.block_of == std::vector<int>{0, 1, 2});
  CHECK(id3.is_identity());

  Congruence coarse = Congruence::canonical({0, 0, 0, 1});
  Congruence fine = Congruence::canonical({0, 1, 0, 2});
  CHECK(coarse.contains(fine));
  CHECK_FALSE(fine.contains(coarse));
  CHECK(coarse.contains(coarse));

  const NModel& m2 = model("M2");
  Congruence split = Congruence::canonical({0, 1, 1, 0, 1, 0});
  CHECK(split.to_string(m2.alg) == "{a d f} {b c e}");
  CHECK(Congruence::identity(6).to_string(m2.alg) ==
        "{a} {b} {c} {d} {e} {f}");
}

TEST_CASE("corpus matrices carry the documented filters and are reduced") {
  const std::vector<std::pair<std::string, std::vector<std::string>>>
      expected = {
          {"M1", {"a", "c", "e"}}, {"M2", {"a", "c"}}, {"M3", {"a", "e"}},
          {"M4", {"b", "d"}},      {"M5", {"b", "c"}}, {"T1", {"a"}},
      };
  for (const auto& [name, filter] : expected) {
    CAPTURE(name);
    const NModel& m = model(name);
    Matrix mat = matrix_of(m);
    CHECK(filter_names(m, mat) == filter);
    for (int v : mat.filter) CHECK(mat.designates(v));

    Congruence lz = leibniz(mat);
    CHECK_MESSAGE(lz.is_identity(), name << ": " << lz.to_string(mat.algebra));
    CHECK(is_reduced(mat));

    auto va = leibniz_via_arrows(mat);
    REQUIRE_MESSAGE(va.has_value(), name << ": " << va.error());
    CHECK(*va == lz);

    ValidationReport clauses = nel_filter_check(mat);
    CHECK_MESSAGE(clauses.ok, name << ": " << clauses.to_string());
  }
}

TEST_CASE("leibniz is the largest filter-compatible congruence") {
  // Cross-check maximality against the full partition enumeration on one
  // six-element and one four-element matrix.
  for (const char* name : {"M2", "M4"}) {
    CAPTURE(name);
    Matrix mat = matrix_of(model(name));
    Congruence lz = leibniz(mat);
    CHECK_FALSE(congruence_defect(mat.algebra, lz).has_value());
    CHECK_FALSE(compatibility_defect(mat, lz).has_value());
    int candidates = 0;
    for (const auto& p : enumerate_partitions(mat.algebra.n())) {
      if (congruence_defect(mat.algebra, p)) continue;
      if (compatibility_defect(mat, p)) continue;
      ++candidates;
      CHECK_MESSAGE(lz.contains(p),
                    name << " misses " << p.to_string(mat.algebra));
    }
    CHECK(candidates >= 1);  // at least the identity partition
  }
}

TEST_CASE("extreme filters: full carrier and empty set") {
  const NModel& m2 = model("M2");
  Matrix full{m2.alg, {0, 1, 2, 3, 4, 5}};
  // Compatibility is vacuous, so the largest congruence of the algebra wins:
  // the single block.
  CHECK(leibniz(full).blocks() == 1);
  CHECK_FALSE(is_reduced(full));
  CHECK(nel_filter_check(full).ok);

  Matrix empty{m2.alg, {}};
  CHECK(leibniz(empty).blocks() == 1);
  PerpRelation r = perp_from_filter(empty);
  CHECK(std::count(r.perp.begin(), r.perp.end(), 1) == 0);
  CHECK(std::count(r.perp_t.begin(), r.perp_t.end(), 1) == 0);
  CHECK(std::count(r.perp_f.begin(), r.perp_f.end(), 1) == 0);
  ValidationReport clauses = nel_filter_check(empty);
  REQUIRE_FALSE(clauses.ok);
  CHECK(clauses.violations.front().law == "nonempty");

  // One-element matrix: the identity and the single block coincide.
  Matrix trivial = matrix_of(model("T1"));
  Congruence lz = leibniz(trivial);
  CHECK(lz.blocks() == 1);
  CHECK(lz.is_identity());
}

TEST_CASE("matrices with an intermediate Leibniz congruence") {
  struct Row {
    const char* model;
    std::vector<std::string> filter;
    const char* partition;
    bool arrows_agree;  // arrow characterization succeeds and matches
  };
  const std::vector<Row> rows = {
      {"M2", {"a", "d", "f"}, "{a d f} {b c e}", true},
      {"M2", {"b", "c", "e"}, "{a d f} {b c e}", false},
      {"M4", {"b", "c"}, "{a d} {b c}", true},
      {"M5", {"a", "c"}, "{a c} {b d}", true},
  };
  for (const auto& row : rows) {
    CAPTURE(row.model);
    CAPTURE(row.partition);
    Matrix mat = matrix_over(row.model, row.filter);
    Congruence lz = leibniz(mat);
    CHECK(lz.to_string(mat.algebra) == row.partition);
    CHECK_FALSE(lz.is_identity());
    CHECK(lz.blocks() > 1);
    auto va = leibniz_via_arrows(mat);
    if (row.arrows_agree) {
      REQUIRE_MESSAGE(va.has_value(), va.error());
      CHECK(*va == lz);
    } else {
      CHECK_FALSE(va.has_value());
    }
    // None of these filters satisfies the NeL closure clauses.
    CHECK_FALSE(nel_filter_check(mat).ok);
  }
}

TEST_CASE("arrow characterization reports its precondition violations") {
  // b => b is designated but a => a is not: the relation is not reflexive.
  Matrix not_reflexive = matrix_over("M2", {"b"});
  auto r1 = leibniz_via_arrows(not_reflexive);
  REQUIRE_FALSE(r1.has_value());
  CHECK(r1.error().find("precondition violation") != std::string::npos);
  CHECK(r1.error().find("not reflexive: a => a is undesignated") !=
        std::string::npos);

  // With a and b designated the relation chains a ~ b ~ d without a ~ d.
  Matrix not_transitive = matrix_over("M2", {"a", "b"});
  auto r2 = leibniz_via_arrows(not_transitive);
  REQUIRE_FALSE(r2.has_value());
  CHECK(r2.error().find("not transitive: a ~ b ~ d but not a ~ d") !=
        std::string::npos);

  // The arrow characterization can succeed on a filter that is not an
  // NeL-filter; it still matches the brute-force congruence then.
  Matrix thin = matrix_over("M2", {"a"});
  auto r3 = leibniz_via_arrows(thin);
  REQUIRE_MESSAGE(r3.has_value(), r3.error());
  CHECK(r3->is_identity());
  CHECK(*r3 == leibniz(thin));
  CHECK_FALSE(nel_filter_check(thin).ok);
}

TEST_CASE("NeL-filter clauses fail with pinpointed witnesses") {
  // (1): an axiom instance evaluates outside the filter.
  Matrix f1 = matrix_over("M2", {"a"});
  ValidationReport r1 = nel_filter_check(f1);
  REQUIRE_FALSE(r1.ok);
  CHECK(r1.violations.front().law == "(1)");
  CHECK(r1.violations.front().detail ==
        "A5 instantiated at phi:=a psi:=a evaluates to undesignated c");

  Matrix f1b = matrix_over("M2", {"b"});
  ValidationReport r1b = nel_filter_check(f1b);
  REQUIRE_FALSE(r1b.ok);
  CHECK(r1b.violations.front().law == "(1)");
  CHECK(r1b.violations.front().detail ==
        "A1 instantiated at phi:=a evaluates to undesignated a");

  // (2): detachment breaks once the axioms all land inside.
  Matrix f2 = matrix_over("M2", {"a", "b", "c"});
  ValidationReport r2 = nel_filter_check(f2);
  REQUIRE_FALSE(r2.ok);
  CHECK(r2.violations.front().law == "(2)");
  CHECK(r2.violations.front().detail ==
        "a and a => e are designated but e is not");

  // (3): a designated pair with an undesignated tensor.
  Matrix f3 = matrix_over("M2", {"a", "c", "e"});
  ValidationReport r3 = nel_filter_check(f3);
  REQUIRE_FALSE(r3.ok);
  CHECK(r3.violations.front().law == "(3)");
  CHECK(r3.violations.front().detail ==
        "a and e are designated but their tensor is not");
}

TEST_CASE("a product matrix exercises clause (4) with nontrivial classes") {
  // The square of the M4 algebra with the first-projection filter is a
  // matrix model of NeL that is not reduced: elements are congruent exactly
  // when their first components agree.
  const NModel& m4 = model("M4");
  FiniteAlgebra sq = square_of(m4.alg);
  Matrix mat{sq, {}};
  std::vector<int> base = designated(m4);
  for (int i = 0; i < sq.n(); ++i)
    if (std::binary_search(base.begin(), base.end(), i / m4.n()))
      mat.filter.push_back(i);
  REQUIRE(mat.filter.size() == 8);

  ValidationReport clauses = nel_filter_check(mat);
  CHECK_MESSAGE(clauses.ok, clauses.to_string());

  auto va = leibniz_via_arrows(mat);
  REQUIRE_MESSAGE(va.has_value(), va.error());
  CHECK(va->blocks() == m4.n());
  for (int i = 0; i < sq.n(); ++i)
    for (int j = 0; j < sq.n(); ++j)
      CHECK(va->same(i, j) == (i / m4.n() == j / m4.n()));
  CHECK_FALSE(va->is_identity());
  CHECK_FALSE(congruence_defect(sq, *va).has_value());
  CHECK_FALSE(compatibility_defect(mat, *va).has_value());
}

TEST_CASE("the filter-induced relation reproduces every corpus model") {
  for (const char* name : {"M1", "M2", "M3", "M4", "M5", "T1"}) {
    CAPTURE(name);
    const NModel& m = model(name);
    Matrix mat = matrix_of(m);
    PerpRelation r = perp_from_filter(mat);
    CHECK(r.perp == m.perp);
    CHECK(r.perp_t == m.perp_t);
    CHECK(r.perp_f == m.perp_f);

    NModel induced = nmodel_from_matrix(mat, m.name + "-induced");
    CHECK(induced.name == m.name + "-induced");
    CHECK(designated(induced) == mat.filter);
    CHECK(validate_nmodel(induced).ok);
  }
  CHECK(nmodel_from_matrix(matrix_of(model("M2"))).name == "matrix-induced");
}

TEST_CASE("roundtrip reports hold on every corpus object") {
  for (const char* name : {"M1", "M2", "M3", "M4", "M5", "T1"}) {
    CAPTURE(name);
    const NModel& m = model(name);

    RoundtripReport rm = roundtrip_check(m);
    CHECK_MESSAGE(rm.ok, rm.detail);
    CHECK(rm.filter_roundtrip);
    CHECK(rm.perp_roundtrip);
    CHECK(rm.nel_filter);
    CHECK(rm.reduced);
    CHECK(rm.nmodel_valid);
    CHECK(rm.equivalence);

    RoundtripReport rx = roundtrip_check(matrix_of(m));
    CHECK_MESSAGE(rx.ok, rx.detail);
    CHECK(rx.filter_roundtrip);
    CHECK(rx.perp_roundtrip);
    CHECK(rx.nel_filter);
    CHECK(rx.reduced);
    CHECK(rx.nmodel_valid);
    CHECK(rx.equivalence);
  }
}

TEST_CASE("roundtrip reports separate broken objects from valid ones") {
  // Dropping one incompatibility pair invalidates the model and the
  // relation is no longer recovered from its designated set, yet the
  // reduced-matrix <-> valid-model equivalence itself survives.
  NModel mutated = mutated_m2();
  RoundtripReport r = roundtrip_check(mutated);
  CHECK(r.filter_roundtrip);
  CHECK_FALSE(r.perp_roundtrip);
  CHECK(r.nel_filter);
  CHECK(r.reduced);
  CHECK_FALSE(r.nmodel_valid);
  CHECK(r.equivalence);
  CHECK(r.ok);
  CHECK(r.detail.find("relation recovered: no") != std::string::npos);
  CHECK(r.detail.find("model conditions: no") != std::string::npos);

  // The full filter satisfies the closure clauses but is not reduced, and
  // the relation it induces is total, which no valid model allows; the
  // equivalence again holds with both sides false.
  const NModel& m2 = model("M2");
  Matrix full{m2.alg, {0, 1, 2, 3, 4, 5}};
  RoundtripReport rf = roundtrip_check(full);
  CHECK(rf.filter_roundtrip);
  CHECK(rf.perp_roundtrip);
  CHECK(rf.nel_filter);
  CHECK_FALSE(rf.reduced);
  CHECK_FALSE(rf.nmodel_valid);
  CHECK(rf.equivalence);
  CHECK(rf.ok);

  // An undesignated singleton filter: not an NeL-filter, however the
  // induced relation also fails the model conditions, so the equivalence
  // holds once more.
  Matrix thin = matrix_over("M2", {"b"});
  RoundtripReport rt = roundtrip_check(thin);
  CHECK_FALSE(rt.nel_filter);
  CHECK_FALSE(rt.nmodel_valid);
  CHECK(rt.equivalence);
}
