#include <doctest.h>

#include "sac/decide.hpp"
#include "sac/derived.hpp"
#include "sac/graph.hpp"
#include "sac/parse.hpp"
#include "sac/sample.hpp"
#include "sac/schema.hpp"

using namespace sac;
using A_ = ArrowTerm;

namespace {

Formula F(const char* text) { return parse_formula(text); }
ArrowTerm T(const char* text) { return parse_term(text); }

}  // namespace

TEST_CASE("axiom instances decide equal") {
  SchemaSubst subst;
  subst.formulas.emplace("A", F("a"));
  subst.formulas.emplace("B", F("b"));
  subst.formulas.emplace("C", F("c"));
  subst.formulas.emplace("D", F("d"));
  auto [lhs, rhs] = axiom_instance(*find_schema("b5-conj"), subst);
  CHECK(equal_graphwise(lhs, rhs).verdict == Verdict::equal);
}

TEST_CASE("a crossing is not the identity") {
  Decision d = equal_graphwise(T("sym_conj(p,p)"), T("id(p & p)"));
  CHECK(d.verdict == Verdict::unequal);
  CHECK(d.left_graph != d.right_graph);
}

TEST_CASE("type mismatch is unequal") {
  CHECK(equal_graphwise(T("id(p)"), T("id(q)")).verdict == Verdict::unequal);
  CHECK(equal_graphwise(T("id(p & q)"), T("sym_conj(p,q)")).verdict == Verdict::unequal);
}

TEST_CASE("reflexivity through the letterless padding path") {
  ArrowTerm tl = T("tau_l(p)");
  CHECK_FALSE(is_pn_term(tl));
  CHECK(equal_graphwise(tl, tl).verdict == Verdict::equal);
}

TEST_CASE("nice-endpoint terms outside PN decide through rho conjugation") {
  ArrowTerm f1 = T("unit_del_fwd_conj(p)");
  ArrowTerm f2 = T("sigma_fwd_conj(p) . sym_conj(p, top)");
  CHECK(equal_graphwise(f1, f2).verdict == Verdict::equal);
}

TEST_CASE("graph-equal-only outside the recognized regimes") {
  // top | top is not conj-nice, so the source is outside the nice regime.
  ArrowTerm f1 = T("unit_del_fwd_conj(p) . tens_conj(id(p), unit_del_fwd_disj(top) . "
                   "tens_disj(unit_del_fwd_conj(top), id(bot)))");
  ArrowType t1 = type_of(f1);
  CHECK(t1.source == F("p & ((top & top | bot))"));
  CHECK_FALSE(is_nice(Conn::conj, t1.source));
  Decision d = equal_graphwise(f1, f1);
  CHECK(d.verdict == Verdict::graph_equal_only);
}

TEST_CASE("rho_conjugate reduces endpoints and keeps the graph") {
  ArrowTerm f = T("id(p & top)");
  ArrowTerm c = rho_conjugate(f);
  ArrowType t = type_of(c);
  CHECK(t.source == F("p"));
  CHECK(t.target == F("p"));
  CHECK(graph_of(c) == graph_of(f));

  ArrowTerm g = T("unit_del_fwd_disj(p)");
  ArrowType tg = type_of(rho_conjugate(g));
  CHECK(tg.source == F("p"));
  CHECK(tg.target == F("p"));

  ArrowTerm h = T("id(top)");
  ArrowType th = type_of(rho_conjugate(h));
  CHECK(th.source == F("top"));
  CHECK(th.target == F("top"));

  CHECK_THROWS_AS(rho_conjugate(T("id(top | top)")), Error);
}

TEST_CASE("rho conjugation preserves graphs on random nice terms") {
  Rng rng(321);
  SampleOptions opts;
  for (int i = 0; i < 100; ++i) {
    ArrowTerm f = random_term(rng, opts);
    ArrowType t = type_of(f);
    if (!is_nice(Conn::conj, t.source) || !is_nice(Conn::disj, t.target)) continue;
    CHECK(graph_of(rho_conjugate(f)) == graph_of(f));
  }
}

TEST_CASE("fresh letters avoid both terms") {
  CHECK(fresh_letter(T("id(p)"), T("id(q)")) == "_z0");
  ArrowTerm used = T("id(_z0 & _z1)");
  CHECK(fresh_letter(used, T("id(p)")) == "_z2");
}

TEST_CASE("soundness under random rewriting") {
  Rng rng(8080);
  SampleOptions opts;
  opts.system = System::pn;
  for (int i = 0; i < 60; ++i) {
    ArrowTerm f = random_term(rng, opts);
    ArrowTerm g = random_rewrites(rng, f, 5, opts);
    Decision d = equal_graphwise(f, g);
    CHECK(d.verdict == Verdict::equal);
  }
}

TEST_CASE("equal_graphwise is an equivalence on rewrite orbits") {
  Rng rng(909);
  SampleOptions opts;
  opts.system = System::pn;
  for (int i = 0; i < 20; ++i) {
    ArrowTerm a = random_term(rng, opts);
    ArrowTerm b = random_rewrites(rng, a, 3, opts);
    ArrowTerm c = random_rewrites(rng, b, 3, opts);
    CHECK(equal_graphwise(a, a).verdict == Verdict::equal);  // reflexive
    CHECK(equal_graphwise(a, b).verdict == equal_graphwise(b, a).verdict);  // symmetric
    // transitive over the sampled triple
    if (equal_graphwise(a, b).verdict == Verdict::equal &&
        equal_graphwise(b, c).verdict == Verdict::equal)
      CHECK(equal_graphwise(a, c).verdict == Verdict::equal);
  }
}

TEST_CASE("fresh-letter padding preserves verdicts on PN terms") {
  Rng rng(10101);
  SampleOptions opts;
  opts.system = System::pn;
  for (int i = 0; i < 40; ++i) {
    ArrowTerm f1 = random_term(rng, opts);
    ArrowTerm f2 = i % 2 == 0 ? random_rewrites(rng, f1, 3, opts) : random_term(rng, opts);
    const Formula p = Formula::letter(fresh_letter(f1, f2));
    Verdict direct = equal_graphwise(f1, f2).verdict;
    Verdict padded = equal_graphwise(A_::tens(Conn::conj, f1, A_::id(p)),
                                     A_::tens(Conn::conj, f2, A_::id(p)))
                         .verdict;
    CHECK(direct == padded);
  }
}
