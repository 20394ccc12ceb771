#ifndef SAC_DECIDE_HPP
#define SAC_DECIDE_HPP

#include <string>

#include "sac/arrows.hpp"
#include "sac/brauer.hpp"

namespace sac {

// Unequal is always sound. Equal is sound when both terms live in a regime
// where the graph functor is known to be faithful; GraphEqualOnly reports
// graph equality outside any such regime.
enum class Verdict : std::uint8_t { equal, unequal, graph_equal_only };

const char* verdict_text(Verdict v);  // "equal" | "unequal" | "graph-equal-only"

struct Decision {
  Verdict verdict;
  BrauerArrow left_graph;
  BrauerArrow right_graph;
};

// Decides equality by comparing types and graphs, then checking whether a
// faithfulness regime applies: plain graph equality suffices for pairs of
// DS/PN terms; for other terms both endpoints must be nice, in which case the
// comparison proceeds through conjugation by the rho isomorphisms and, when a
// reduced endpoint is letterless, padding by a fresh letter.
Decision equal_graphwise(const ArrowTerm& f1, const ArrowTerm& f2);

// rho_disj(target) . f . rho_conj_inv(source); requires a conj-nice source
// and a disj-nice target. The conjugate's endpoints are constant-free, top,
// or bot, and its graph equals the graph of f.
ArrowTerm rho_conjugate(const ArrowTerm& f);

// First letter of the form _z<k> not occurring in either term.
std::string fresh_letter(const ArrowTerm& f1, const ArrowTerm& f2);

}  // namespace sac

#endif
