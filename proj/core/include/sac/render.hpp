#ifndef SAC_RENDER_HPP
#define SAC_RENDER_HPP

#include <string>

#include "sac/brauer.hpp"
#include "sac/gentzen.hpp"

namespace sac {

enum class GraphFormat : std::uint8_t { pairs, dot, ascii };

// pairs: the canonical JSON serialization; dot: an undirected graph with the
// two ordinals as ranked rows; ascii: a deterministic two-row picture with
// sources on the bottom row and targets on the top row.
std::string render_graph(const BrauerArrow& b, GraphFormat fmt);

// Reads the pairs serialization back.
BrauerArrow parse_graph(std::string_view json);

}  // namespace sac

#endif
