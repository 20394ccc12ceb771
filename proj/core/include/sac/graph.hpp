#ifndef SAC_GRAPH_HPP
#define SAC_GRAPH_HPP

#include "sac/arrows.hpp"
#include "sac/brauer.hpp"

namespace sac {

// Graph of a single generator: identities for id/assoc/dist/unit_del,
// crossings for sym, caps for delta_conj, cups for sigma_disj.
BrauerArrow generator_graph(const ArrowTerm& gen);

// Homomorphic extension: composition via compose, tensor via shifted_union.
// Memoizes shared subterms within one call.
BrauerArrow graph_of(const ArrowTerm& f);

}  // namespace sac

#endif
