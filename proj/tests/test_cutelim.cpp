#include <doctest.h>

#include "sac/cutelim.hpp"
#include "sac/graph.hpp"
#include "sac/parse.hpp"
#include "sac/sample.hpp"

using namespace sac;
using G = GentzenTerm;

namespace {

Formula F(const char* text) { return parse_formula(text); }
ArrowTerm T(const char* text) { return parse_term(text); }

GentzenTerm hole_cut(const char* a, GentzenTerm f, GentzenTerm g) {
  return G::cut(Context::hole(Conn::conj), Context::hole(Conn::disj), F(a), std::move(f),
                std::move(g));
}

void check_eliminated(const GentzenTerm& net, const EliminateResult& res) {
  CHECK(is_cut_free(res.net));
  CHECK(res.net.type() == net.type());
  CHECK(graph_of(denote(res.net)) == graph_of(denote(net)));
  for (const TraceStep& s : res.trace)
    if (s.after) CHECK(*s.after < s.before);
}

}  // namespace

TEST_CASE("clusters of leaves have length one") {
  CHECK(cluster_length(G::ax(F("p")), {SeqSide::source, {}}) == 1);
  CHECK(cluster_length(G::ax(F("p")), {SeqSide::target, {}}) == 1);
  CHECK(cluster_length(G::ax(F("top")), {SeqSide::target, {}}) == 1);
  CHECK(cluster_length(G::ax(F("bot")), {SeqSide::source, {}}) == 1);
}

TEST_CASE("clusters chain through parameters") {
  GentzenTerm wrapped = G::bot_bwd(G::ax(F("p")));  // p |- p | bot
  CHECK(cluster_length(wrapped, {SeqSide::source, {}}) == 2);
  CHECK(cluster_length(wrapped, {SeqSide::target, {Step::left}}) == 2);
  CHECK_THROWS_AS(cluster_length(wrapped, {SeqSide::target, {Step::right}}), Error);
  CHECK_THROWS_AS(cluster_length(wrapped, {SeqSide::target, {}}), Error);
}

TEST_CASE("the worked parameter example") {
  // conj(1_{p|q}, bot_bwd(1_r)) : (p|q) & r |- (p&r) | (q|bot)
  GentzenTerm net = G::conj_rule(identity_net(F("p | q")), G::bot_bwd(identity_net(F("r"))));
  // the target conjunction p & r is the leaf
  CHECK(cluster_length(net, {SeqSide::target, {Step::left}}) == 1);
  // the source p | q is a lower parameter whose chain descends into 1_{p|q}
  CHECK(cluster_length(net, {SeqSide::source, {Step::left}}) >= 2);
}

TEST_CASE("complexity of the letter axiom cut") {
  GentzenTerm c = hole_cut("p", G::ax(F("p")), G::ax(F("p")));
  CHECK(cut_complexity(c) == Complexity{0, 0});
}

TEST_CASE("complexity with a negated cut formula") {
  // f : top & (p & ~p) |- bot with source cluster length 2 for ~p
  GentzenTerm f = G::top_fwd(G::neg_l(G::bot_bwd(G::ax(F("p")))));
  Context x = parse_context("top & (p & _)", Conn::conj);
  CHECK(cluster_length(f, {SeqSide::source, x.hole_path()}) == 2);
  // g : top |- ~p | p with target cluster length 1 for ~p
  GentzenTerm g = G::neg_r(G::top_fwd(G::ax(F("p"))));
  Context y = parse_context("_ | p", Conn::disj);
  CHECK(cluster_length(g, {SeqSide::target, y.hole_path()}) == 1);
  GentzenTerm c = G::cut(x, y, F("~p"), f, g);
  CHECK(cut_complexity(c) == Complexity{1, 1});
}

TEST_CASE("complexity with a disjunctive cut formula counts the source side") {
  // f = disj(top_fwd(1_q), top_fwd(1_bot)) : (top & top) & (q | bot) |- q | bot
  GentzenTerm f = G::disj_rule(G::top_fwd(G::ax(F("q"))), G::top_fwd(G::ax(F("bot"))));
  Context x = parse_context("(top & top) & _", Conn::conj);
  CHECK(cluster_length(f, {SeqSide::source, x.hole_path()}) == 1);
  GentzenTerm g = G::bot_bwd(G::ax(F("q")));  // q |- q | bot
  GentzenTerm c = G::cut(x, Context::hole(Conn::disj), F("q | bot"), f, g);
  CHECK(cut_complexity(c) == Complexity{1, 0});
}

TEST_CASE("cut_complexity requires a topmost cut") {
  GentzenTerm inner = hole_cut("p", G::ax(F("p")), G::ax(F("p")));
  GentzenTerm outer = hole_cut("p", G::ax(F("p")), inner);
  CHECK_THROWS_AS(cut_complexity(outer), Error);
  CHECK_THROWS_AS(cut_complexity(G::ax(F("p"))), Error);
}

TEST_CASE("is_cut_free") {
  CHECK(is_cut_free(G::ax(F("p"))));
  CHECK_FALSE(is_cut_free(hole_cut("p", G::ax(F("p")), G::ax(F("p")))));
  CHECK(is_cut_free(identity_net(F("~(p & q)"))));
}

TEST_CASE("axiom cuts eliminate in one step") {
  GentzenTerm c = hole_cut("p", G::ax(F("p")), G::ax(F("p")));
  EliminateResult res = eliminate(c);
  CHECK(res.net == G::ax(F("p")));
  REQUIRE(res.trace.size() == 1);
  CHECK(res.trace[0].before == Complexity{0, 0});
}

TEST_CASE("eliminate is the identity on cut-free nets") {
  GentzenTerm net = identity_net(F("~(p | q) & top"));
  EliminateResult res = eliminate(net);
  CHECK(res.net == net);
  CHECK(res.trace.empty());
}

TEST_CASE("composition of identities eliminates to an identity graph") {
  GentzenTerm net = gentzenize(T("id(p & q) . id(p & q)"));
  EliminateOptions opts;
  opts.check_each_step = true;
  EliminateResult res = eliminate(net, opts);
  CHECK(is_cut_free(res.net));
  CHECK(res.net.type() == net.type());
  CHECK(graph_of(denote(res.net)) == BrauerArrow::identity(2));
}

TEST_CASE("a principal conj configuration drops the degree") {
  // cut against the (&) pattern for p & q with a leaf occurrence
  GentzenTerm g = tens_net(Conn::conj, G::ax(F("p")), G::ax(F("q")));
  // target of g is p & q; build f with source (p & q) displayed at the hole
  GentzenTerm f = identity_net(F("p & q"));
  GentzenTerm c = hole_cut("p & q", f, g);
  EliminateOptions opts;
  opts.check_each_step = true;
  EliminateResult res = eliminate(c, opts);
  check_eliminated(c, res);
  bool saw_principal = false;
  for (const TraceStep& s : res.trace)
    if (s.rule == "principal-conj") {
      saw_principal = true;
      CHECK(s.cut_formula == F("p & q"));
    }
  CHECK(saw_principal);
}

TEST_CASE("a principal neg configuration eliminates") {
  GentzenTerm f = identity_net(F("~p"));
  GentzenTerm g = identity_net(F("~p"));
  GentzenTerm c = hole_cut("~p", f, g);
  EliminateOptions opts;
  opts.check_each_step = true;
  EliminateResult res = eliminate(c, opts);
  check_eliminated(c, res);
}

TEST_CASE("targeted commuting configurations") {
  EliminateOptions opts;
  opts.check_each_step = true;
  auto contains_rule = [](const EliminateResult& res, const char* rule) {
    for (const TraceStep& s : res.trace)
      if (s.rule == rule) return true;
    return false;
  };

  SUBCASE("the cut commutes past neg_l on the g side") {
    GentzenTerm g = G::neg_l(identity_net(F("s | (p & q)")));  // (s|(p&q)) & ~s |- p & q
    GentzenTerm f = identity_net(F("(p & q) & u"));
    GentzenTerm c = G::cut(parse_context("_ & u", Conn::conj), Context::hole(Conn::disj),
                           F("p & q"), f, g);
    EliminateResult res = eliminate(c, opts);
    check_eliminated(c, res);
    CHECK(contains_rule(res, "commute-g/neg-l"));
  }

  SUBCASE("the cut commutes into a conj_rule premise on the f side") {
    GentzenTerm f = G::conj_rule(identity_net(F("p | q")), identity_net(F("r | s")));
    GentzenTerm g = identity_net(F("(p | q) | t"));
    GentzenTerm c = G::cut(parse_context("_ & (r | s)", Conn::conj),
                           parse_context("_ | t", Conn::disj), F("p | q"), f, g);
    EliminateResult res = eliminate(c, opts);
    check_eliminated(c, res);
    CHECK(contains_rule(res, "commute-f/conj-rule"));
  }

  SUBCASE("the cut commutes into a disj_rule premise on the g side") {
    GentzenTerm g = G::disj_rule(identity_net(F("p & q")), identity_net(F("r & s")));
    GentzenTerm f = identity_net(F("(p & q) & u"));
    GentzenTerm c = G::cut(parse_context("_ & u", Conn::conj),
                           parse_context("_ | (r & s)", Conn::disj), F("p & q"), f, g);
    EliminateResult res = eliminate(c, opts);
    check_eliminated(c, res);
    CHECK(contains_rule(res, "commute-g/disj-rule"));
  }

  SUBCASE("the cut commutes into a disj_rule premise on the f side") {
    GentzenTerm f = G::disj_rule(identity_net(F("(p | v) & q")), identity_net(F("r & s")));
    // f : ((p|v) & r) & (q | s) |- ((p|v) & q) | (r & s); track p|v in the source
    GentzenTerm g = identity_net(F("(p | v) | t"));
    GentzenTerm c = G::cut(parse_context("(_ & r) & (q | s)", Conn::conj),
                           parse_context("_ | t", Conn::disj), F("p | v"), f, g);
    EliminateResult res = eliminate(c, opts);
    check_eliminated(c, res);
    CHECK(contains_rule(res, "commute-f/disj-rule"));
  }

  SUBCASE("the cut commutes into a conj_rule premise on the g side") {
    GentzenTerm g = G::conj_rule(identity_net(F("p | (q & w)")), identity_net(F("r | s")));
    // g : (p|(q&w)) & (r|s) |- (p & r) | ((q&w) | s); track q&w in the target
    GentzenTerm f = identity_net(F("(q & w) & u"));
    GentzenTerm c = G::cut(parse_context("_ & u", Conn::conj),
                           parse_context("(p & r) | (_ | s)", Conn::disj), F("q & w"), f, g);
    EliminateResult res = eliminate(c, opts);
    check_eliminated(c, res);
    CHECK(contains_rule(res, "commute-g/conj-rule"));
  }
}

TEST_CASE("random nets eliminate with all invariants checked per step") {
  Rng rng(2024);
  SampleOptions opts;
  opts.max_letters = 3;
  EliminateOptions eopts;
  eopts.check_each_step = true;
  for (int i = 0; i < 60; ++i) {
    GentzenTerm net = random_net(rng, 2, opts);
    EliminateResult res = eliminate(net, eopts);
    check_eliminated(net, res);
  }
}

TEST_CASE("strategy independence at the graph level") {
  Rng rng(31337);
  SampleOptions opts;
  opts.max_letters = 3;
  EliminateOptions default_side;
  EliminateOptions flipped;
  flipped.prefer_f_side = true;
  for (int i = 0; i < 30; ++i) {
    GentzenTerm net = random_net(rng, 2, opts);
    EliminateResult a = eliminate(net, default_side);
    EliminateResult b = eliminate(net, flipped);
    CHECK(is_cut_free(a.net));
    CHECK(is_cut_free(b.net));
    CHECK(a.net.type() == b.net.type());
    CHECK(graph_of(denote(a.net)) == graph_of(denote(b.net)));
  }
}
