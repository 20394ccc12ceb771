#ifndef SAC_TESTS_COMPOSE_ORACLE_HPP
#define SAC_TESTS_COMPOSE_ORACLE_HPP

#include "sac/brauer.hpp"

namespace sac::testing {

// Composition computed literally as the transitive closure of the union of
// the two relations with the middle layer untagged, intersected with pairs of
// outer nodes. Quadratic-ish and independent of the union-find path; used as
// the testing oracle for compose().
BrauerArrow compose_oracle(const BrauerArrow& p, const BrauerArrow& r);

}  // namespace sac::testing

#endif
