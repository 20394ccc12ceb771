#include <doctest.h>

#include "sac/context.hpp"
#include "sac/formula.hpp"
#include "sac/parse.hpp"

using namespace sac;

namespace {

Formula F(const char* text) { return parse_formula(text); }

}  // namespace

TEST_CASE("letter_count is additive and ignores structure") {
  CHECK(F("(q | ~r) | q").letter_count() == 3);
  CHECK(F("p | q").letter_count() == 2);
  CHECK(F("top").letter_count() == 0);
  CHECK(F("~~p & (top | bot)").letter_count() == 1);
}

TEST_CASE("structural equality distinguishes associations") {
  CHECK(F("p & (q & r)") == F("p & q & r"));
  CHECK(F("(p & q) & r") != F("p & (q & r)"));
  CHECK(F("p") != F("q"));
  CHECK(F("~p") != F("p"));
}

TEST_CASE("superficial occurrences for conj") {
  auto paths = superficial(Conn::conj, F("(p | q) & r"));
  REQUIRE(paths.size() == 2);
  CHECK(*subformula_at(F("(p | q) & r"), paths[0]) == F("p | q"));
  CHECK(*subformula_at(F("(p | q) & r"), paths[1]) == F("r"));
}

TEST_CASE("superficial occurrences for disj skip bot") {
  const Formula a = F("(p & r) | (q | bot)");
  auto paths = superficial(Conn::disj, a);
  REQUIRE(paths.size() == 2);
  CHECK(*subformula_at(a, paths[0]) == F("p & r"));
  CHECK(*subformula_at(a, paths[1]) == F("q"));
}

TEST_CASE("the unit is not superficial in itself") {
  CHECK(superficial(Conn::conj, F("top")).empty());
  CHECK(superficial(Conn::disj, F("bot")).empty());
  CHECK(superficial(Conn::conj, F("bot")).size() == 1);
}

TEST_CASE("superficial concatenates across the main connective") {
  for (const char* lt : {"p & q", "p | ~q", "top & p"}) {
    for (const char* rt : {"r", "(p | q) & bot"}) {
      const Formula l = F(lt);
      const Formula r = F(rt);
      for (Conn xi : {Conn::conj, Conn::disj}) {
        const Formula both = Formula::bin(xi, l, r);
        auto expect = superficial(xi, l);
        for (auto& p : expect) p.insert(p.begin(), Step::left);
        auto right = superficial(xi, r);
        for (auto& p : right) p.insert(p.begin(), Step::right);
        expect.insert(expect.end(), right.begin(), right.end());
        CHECK(superficial(xi, both) == expect);
      }
    }
  }
}

TEST_CASE("superficial paths are valid and non-overlapping") {
  const Formula a = F("((p | q) & top) & (~r & (s | bot))");
  for (Conn xi : {Conn::conj, Conn::disj}) {
    auto paths = superficial(xi, a);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      CHECK(subformula_at(a, paths[i]).has_value());
      CHECK(is_superficial_at(xi, a, paths[i]));
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        // no path is a prefix of another
        const auto& p = paths[i];
        const auto& q = paths[j];
        const auto len = std::min(p.size(), q.size());
        bool differs = false;
        for (std::size_t k = 0; k < len; ++k)
          if (p[k] != q[k]) differs = true;
        CHECK(differs);
      }
    }
  }
}

TEST_CASE("niceness") {
  CHECK(is_nice(Conn::conj, F("top")));
  CHECK(is_nice(Conn::conj, F("p & top")));
  CHECK_FALSE(is_nice(Conn::conj, F("bot")));
  CHECK_FALSE(is_nice(Conn::disj, F("top")));
  CHECK(is_nice(Conn::disj, F("bot | ~p")));
  CHECK_FALSE(is_nice(Conn::conj, F("p | top")));
  CHECK_FALSE(is_nice(Conn::conj, F("~(p & top)")));
}

TEST_CASE("constant-free formulae are nice both ways") {
  for (const char* t : {"p", "~p", "p & (q | ~r)", "(p | q) & (q | p)"}) {
    CHECK(is_nice(Conn::conj, F(t)));
    CHECK(is_nice(Conn::disj, F(t)));
    CHECK(is_constant_free(F(t)));
    CHECK(in_lang_neg(F(t)));
  }
}

TEST_CASE("language predicates") {
  CHECK(in_lang_conj_disj(F("p & (q | r)")));
  CHECK_FALSE(in_lang_conj_disj(F("~p")));
  CHECK_FALSE(in_lang_conj_disj(F("top")));
  CHECK(is_literate(F("p & top")));
  CHECK(is_letterless(F("top & (bot | top)")));
}

TEST_CASE("context application and frames") {
  Context box_and_r = parse_context("_ & r", Conn::conj);
  CHECK(box_and_r.apply(F("p | q")) == F("(p | q) & r"));

  Context worked = parse_context("f & ((c & _) & b)", Conn::conj);
  CHECK(worked.frame_formula() == F("f & (c & b)"));
  CHECK(worked.apply(F("a")) == F("f & ((c & a) & b)"));
  CHECK(worked.hole_path() == Path{Step::right, Step::left, Step::right});

  Context b_or_hole = parse_context("b | _", Conn::disj);
  CHECK(b_or_hole.frame_formula() == F("b"));

  CHECK_THROWS_AS(Context::hole(Conn::conj).frame_formula(), Error);
}

TEST_CASE("letter counts split over proper contexts") {
  for (const char* ct : {"_ & r", "(p | q) & (_ & r)", "x & (y & _)"}) {
    Context z = parse_context(ct, Conn::conj);
    for (const char* at : {"p", "p | ~q", "top"}) {
      const Formula a = F(at);
      CHECK(z.apply(a).letter_count() == z.frame_formula().letter_count() + a.letter_count());
    }
  }
}

TEST_CASE("contexts reject mixed spines") {
  CHECK_THROWS_AS(parse_context("p | (_ & q)", Conn::conj), ParseError);
  CHECK_THROWS_AS(parse_context("~_", Conn::conj), ParseError);
  CHECK_THROWS_AS(parse_context("p & q", Conn::conj), ParseError);
  CHECK_NOTHROW(parse_context("_", Conn::conj));
  CHECK_NOTHROW(parse_context("_", Conn::disj));
}

TEST_CASE("replace_at and subformula_at") {
  const Formula a = F("p & (q | r)");
  Path p{Step::right, Step::left};
  CHECK(*subformula_at(a, p) == F("q"));
  CHECK(replace_at(a, p, F("~s")) == F("p & (~s | r)"));
  CHECK_FALSE(subformula_at(a, Path{Step::neg}).has_value());
}
