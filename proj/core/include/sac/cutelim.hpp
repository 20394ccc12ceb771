#ifndef SAC_CUTELIM_HPP
#define SAC_CUTELIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "sac/gentzen.hpp"

namespace sac {

enum class SeqSide : std::uint8_t { source, target };

// A conj-superficial occurrence in a net's source or a disj-superficial
// occurrence in its target.
struct OccurrenceRef {
  SeqSide side;
  Path path;
};

// Lexicographically ordered termination measure of a cut.
struct Complexity {
  std::size_t degree = 0;
  std::size_t rank = 0;
  auto operator<=>(const Complexity&) const = default;
  std::string str() const {
    return "(" + std::to_string(degree) + "," + std::to_string(rank) + ")";
  }
};

// Length of the chain of parameter occurrences from x down to a leaf.
std::size_t cluster_length(const GentzenTerm& g, const OccurrenceRef& x);

// Degree and rank of a topmost cut (both arguments cut-free).
Complexity cut_complexity(const GentzenTerm& cut_node);

struct TraceStep {
  std::string rule;
  Formula cut_formula;
  Complexity before;
  std::optional<Complexity> after;  // complexity of the next cut to process, if any
};

struct EliminateOptions {
  // Validate net type and graph preservation after every step.
  bool check_each_step = false;
  // Tie-break taken when the rank formula permits reducing either premise:
  // default reduces the g side first.
  bool prefer_f_side = false;
};

struct EliminateResult {
  GentzenTerm net;
  std::vector<TraceStep> trace;
};

// Rewrites innermost cuts first until none remain. Preserves the net type
// and the graph of the denotation; the complexity strictly decreases from
// each processed cut to every cut its step introduces.
EliminateResult eliminate(const GentzenTerm& g, const EliminateOptions& opts = {});

}  // namespace sac

#endif
