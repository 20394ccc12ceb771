#include "sac/decide.hpp"

#include <algorithm>

#include "sac/derived.hpp"
#include "sac/graph.hpp"

namespace sac {

const char* verdict_text(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::unequal: return "unequal";
    case Verdict::graph_equal_only: return "graph-equal-only";
  }
  return "?";
}

namespace {

// Prefers the stated polarity (conj for sources, disj for targets) and falls
// back to the other one; either way the endpoint is isomorphic to a
// constant-free formula, top, or bot.
Conn nice_polarity(const Formula& a, Conn preferred, const char* role) {
  if (is_nice(preferred, a)) return preferred;
  if (is_nice(dual(preferred), a)) return dual(preferred);
  throw Error(std::string("rho_conjugate: ") + role + " " + a.str() + " is not nice");
}

}  // namespace

ArrowTerm rho_conjugate(const ArrowTerm& f) {
  const ArrowType t = type_of(f);
  const Conn src_pol = nice_polarity(t.source, Conn::conj, "source");
  const Conn tgt_pol = nice_polarity(t.target, Conn::disj, "target");
  return ArrowTerm::comp(rho(tgt_pol, t.target),
                         ArrowTerm::comp(f, rho_inv(src_pol, t.source)));
}

namespace {

void collect_term_letters(const ArrowTerm& f, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < f.formula_count(); ++i) collect_letters(f.formula(i), out);
  if (!f.is_generator()) {
    collect_term_letters(f.fst(), out);
    collect_term_letters(f.snd(), out);
  }
}

}  // namespace

std::string fresh_letter(const ArrowTerm& f1, const ArrowTerm& f2) {
  std::vector<std::string> used;
  collect_term_letters(f1, used);
  collect_term_letters(f2, used);
  std::sort(used.begin(), used.end());
  for (std::size_t k = 0;; ++k) {
    std::string candidate = "_z" + std::to_string(k);
    if (!std::binary_search(used.begin(), used.end(), candidate)) return candidate;
  }
}

Decision equal_graphwise(const ArrowTerm& f1, const ArrowTerm& f2) {
  const ArrowType t1 = type_of(f1);
  const ArrowType t2 = type_of(f2);
  BrauerArrow g1 = graph_of(f1);
  BrauerArrow g2 = graph_of(f2);
  if (!(t1 == t2) || !(g1 == g2))
    return {Verdict::unequal, std::move(g1), std::move(g2)};

  // Graphs agree. Faithfulness holds outright for DS/PN terms.
  if (is_pn_term(f1) && is_pn_term(f2)) return {Verdict::equal, std::move(g1), std::move(g2)};

  const bool source_nice =
      is_nice(Conn::conj, t1.source) || is_nice(Conn::disj, t1.source);
  const bool target_nice =
      is_nice(Conn::disj, t1.target) || is_nice(Conn::conj, t1.target);
  if (!source_nice || !target_nice)
    return {Verdict::graph_equal_only, std::move(g1), std::move(g2)};

  // Both endpoints nice: conjugate by rho so the endpoints become
  // constant-free, top or bot.
  ArrowTerm c1 = rho_conjugate(f1);
  ArrowTerm c2 = rho_conjugate(f2);
  const ArrowType ct = type_of(c1);

  // When an endpoint reduces to a letterless formula, compare the fresh-letter
  // paddings; their endpoints live in the literate regime.
  if (is_letterless(ct.source) || is_letterless(ct.target)) {
    const Formula p = Formula::letter(fresh_letter(c1, c2));
    if (is_letterless(ct.source)) {
      c1 = ArrowTerm::tens(Conn::conj, c1, ArrowTerm::id(p));
      c2 = ArrowTerm::tens(Conn::conj, c2, ArrowTerm::id(p));
    } else {
      c1 = ArrowTerm::tens(Conn::disj, c1, ArrowTerm::id(p));
      c2 = ArrowTerm::tens(Conn::disj, c2, ArrowTerm::id(p));
    }
  }
  const Verdict v =
      graph_of(c1) == graph_of(c2) ? Verdict::equal : Verdict::unequal;
  return {v, std::move(g1), std::move(g2)};
}

}  // namespace sac
