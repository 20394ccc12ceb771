#include <doctest.h>

#include "sac/graph.hpp"
#include "sac/parse.hpp"
#include "sac/sample.hpp"
#include "sac/schema.hpp"

using namespace sac;
using A_ = ArrowTerm;

namespace {

Formula F(const char* text) { return parse_formula(text); }
ArrowTerm T(const char* text) { return parse_term(text); }

constexpr BrNode S(std::uint32_t i) { return BrNode{false, i}; }
constexpr BrNode Tn(std::uint32_t i) { return BrNode{true, i}; }

BrauerArrow arrow(std::uint32_t m, std::uint32_t n,
                  std::vector<std::pair<BrNode, BrNode>> pairs) {
  return BrauerArrow(m, n, std::move(pairs));
}

}  // namespace

TEST_CASE("the printed figure triple") {
  // crossing
  CHECK(generator_graph(T("sym_conj(p | q, (q | ~r) | q)")) ==
        arrow(5, 5,
              {{S(0), Tn(3)}, {S(1), Tn(4)}, {S(2), Tn(0)}, {S(3), Tn(1)}, {S(4), Tn(2)}}));
  // caps
  CHECK(generator_graph(T("delta_conj(p | q, (q | ~r) | q)")) ==
        arrow(3, 7,
              {{S(0), Tn(0)}, {S(1), Tn(1)}, {S(2), Tn(2)}, {Tn(3), Tn(5)}, {Tn(4), Tn(6)}}));
  // cups
  CHECK(generator_graph(T("sigma_disj(p | q, (q | ~r) | q)")) ==
        arrow(7, 3,
              {{S(0), S(2)}, {S(1), S(3)}, {S(4), Tn(0)}, {S(5), Tn(1)}, {S(6), Tn(2)}}));
}

TEST_CASE("identity-like generators map to identities") {
  CHECK(generator_graph(T("id(p & (q | ~r))")) == BrauerArrow::identity(3));
  CHECK(generator_graph(T("assoc_fwd_conj(p, q, r)")) == BrauerArrow::identity(3));
  CHECK(generator_graph(T("assoc_bwd_disj(p, q | q, r)")) == BrauerArrow::identity(4));
  CHECK(generator_graph(T("dist(p, q, r)")) == BrauerArrow::identity(3));
  CHECK(generator_graph(T("unit_del_fwd_conj(p & q)")) == BrauerArrow::identity(2));
  CHECK(generator_graph(T("unit_del_bwd_disj(top)")) == BrauerArrow::identity(0));
}

TEST_CASE("small crossings") {
  CHECK(graph_of(T("sym_conj(p,q)")) == arrow(2, 2, {{S(0), Tn(1)}, {S(1), Tn(0)}}));
  CHECK(graph_of(T("sym_disj(p,q)")) == arrow(2, 2, {{S(0), Tn(1)}, {S(1), Tn(0)}}));
}

TEST_CASE("the disj crossing mirrors the conj crossing") {
  Rng rng(5);
  SampleOptions opts;
  for (int i = 0; i < 30; ++i) {
    Formula a = random_formula(rng, opts);
    Formula b = random_formula(rng, opts);
    BrauerArrow conj = graph_of(A_::sym(Conn::conj, a, b));
    BrauerArrow disj = graph_of(A_::sym(Conn::disj, a, b));
    std::vector<std::pair<BrNode, BrNode>> mirrored;
    for (const auto& [u, v] : conj.pairs()) {
      // {m_s, n_t} in conj iff {n_s, m_t} in disj
      mirrored.push_back({BrNode{false, v.index}, BrNode{true, u.index}});
    }
    CHECK(disj == arrow(conj.source_size(), conj.target_size(), std::move(mirrored)));
  }
}

TEST_CASE("the composite of the sigma-delta equation is the identity strand") {
  ArrowTerm lhs = T("sigma_disj(p,p) . dist(p, ~p, p) . delta_conj(p,p)");
  CHECK(graph_of(lhs) == arrow(1, 1, {{S(0), Tn(0)}}));
  CHECK(graph_of(T("id(p & q)")) == BrauerArrow::identity(2));
}

TEST_CASE("graphs are Brauerian with even node count") {
  Rng rng(77);
  SampleOptions opts;
  for (int i = 0; i < 100; ++i) {
    ArrowTerm t = random_term(rng, opts);
    BrauerArrow g = graph_of(t);
    CHECK((g.source_size() + g.target_size()) % 2 == 0);
    CHECK(g.as_split_equivalence().is_brauerian());
    ArrowType ty = type_of(t);
    CHECK(g.source_size() == ty.source.letter_count());
    CHECK(g.target_size() == ty.target.letter_count());
  }
}

TEST_CASE("tensor against an identity is a shifted union") {
  Rng rng(13);
  SampleOptions opts;
  for (int i = 0; i < 50; ++i) {
    ArrowTerm f = random_term(rng, opts);
    Formula a = random_formula(rng, opts);
    BrauerArrow gf = graph_of(f);
    for (Conn c : {Conn::conj, Conn::disj}) {
      BrauerArrow whole = graph_of(A_::tens(c, f, A_::id(a)));
      CHECK(whole == shifted_union(gf, BrauerArrow::identity(
                                           static_cast<std::uint32_t>(a.letter_count())),
                                   gf.source_size(), gf.target_size()));
    }
  }
}

TEST_CASE("graph_of rejects ill-typed terms") {
  CHECK_THROWS_AS(graph_of(A_::comp(A_::id(F("p")), A_::id(F("p & p")))), TypeError);
}

TEST_CASE("functor well-definedness across the whole axiom catalog") {
  Rng rng(271828);
  SampleOptions opts;
  opts.max_letters = 4;
  for (const AxiomSchema& schema : axiom_catalog()) {
    opts.system = schema.system;
    for (int i = 0; i < 30; ++i) {
      SchemaSubst subst = random_subst(rng, schema, opts);
      auto [lhs, rhs] = axiom_instance(schema, subst);
      REQUIRE_MESSAGE(graph_of(lhs) == graph_of(rhs), schema.name);
    }
  }
}

TEST_CASE("schema instances over the full language keep graphs equal") {
  // DS and PN schemas instantiated with unit-bearing formulas still hold.
  Rng rng(314159);
  SampleOptions opts;
  opts.system = System::s;
  opts.max_letters = 4;
  for (const AxiomSchema& schema : axiom_catalog()) {
    for (int i = 0; i < 10; ++i) {
      SchemaSubst subst = random_subst(rng, schema, opts);
      auto [lhs, rhs] = axiom_instance(schema, subst);
      REQUIRE_MESSAGE(graph_of(lhs) == graph_of(rhs), schema.name);
    }
  }
}
