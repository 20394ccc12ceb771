#ifndef SAC_SAMPLE_HPP
#define SAC_SAMPLE_HPP

#include <random>

#include "sac/brauer.hpp"
#include "sac/gentzen.hpp"
#include "sac/schema.hpp"

namespace sac {

using Rng = std::mt19937_64;

struct SampleOptions {
  System system = System::s;       // which connectives/generators to use
  std::size_t max_letters = 4;     // per random formula
  std::size_t letter_pool = 3;     // distinct letter names p0..p{n-1}
  std::size_t term_depth = 3;      // recursion budget for random terms
};

Formula random_formula(Rng& rng, const SampleOptions& opts);
Context random_context(Rng& rng, Conn conn, std::size_t depth, const SampleOptions& opts);

// Random well-typed term with the given source (resp. target).
ArrowTerm random_term_from(Rng& rng, const Formula& source, std::size_t depth,
                           const SampleOptions& opts);
ArrowTerm random_term_to(Rng& rng, const Formula& target, std::size_t depth,
                         const SampleOptions& opts);
// Random well-typed term with free endpoints.
ArrowTerm random_term(Rng& rng, const SampleOptions& opts);

// Random substitution covering all parameters of a schema.
SchemaSubst random_subst(Rng& rng, const AxiomSchema& schema, const SampleOptions& opts);

// Applies up to `count` random axiom rewrites (random schema, position and
// direction); skips combinations that do not match.
ArrowTerm random_rewrites(Rng& rng, const ArrowTerm& start, std::size_t count,
                          const SampleOptions& opts);

// Random Brauerian arrow m |- n (m + n even is forced by padding).
BrauerArrow random_brauer(Rng& rng, std::uint32_t m, std::uint32_t n);

// Random net containing at most `max_cuts` cuts, mixing translated terms
// with directly constructed cuts over random contexts.
GentzenTerm random_net(Rng& rng, std::size_t max_cuts, const SampleOptions& opts);

}  // namespace sac

#endif
