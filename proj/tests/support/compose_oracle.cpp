#include "support/compose_oracle.hpp"

#include <vector>

namespace sac::testing {

BrauerArrow compose_oracle(const BrauerArrow& p, const BrauerArrow& r) {
  if (r.target_size() != p.source_size())
    throw Error("compose_oracle: middle sizes differ");
  const std::size_t m = r.source_size();
  const std::size_t n = r.target_size();
  const std::size_t k = p.target_size();
  const std::size_t total = m + n + k;
  // Nodes 0..m-1: sources; m..m+n-1: middle layer; m+n..: targets.
  std::vector<std::vector<bool>> rel(total, std::vector<bool>(total, false));
  for (std::size_t i = 0; i < total; ++i) rel[i][i] = true;
  auto relate = [&](std::size_t a, std::size_t b) {
    rel[a][b] = true;
    rel[b][a] = true;
  };
  // R^{-t}: the target tags of r are erased onto the middle layer.
  for (const auto& [u, v] : r.pairs())
    relate(u.target ? m + u.index : u.index, v.target ? m + v.index : v.index);
  // P^{-s}: the source tags of p are erased onto the middle layer.
  for (const auto& [u, v] : p.pairs())
    relate(u.target ? m + n + u.index : m + u.index, v.target ? m + n + v.index : m + v.index);
  // Tr(...): Warshall closure.
  for (std::size_t w = 0; w < total; ++w)
    for (std::size_t i = 0; i < total; ++i)
      if (rel[i][w])
        for (std::size_t j = 0; j < total; ++j)
          if (rel[w][j]) rel[i][j] = true;
  // Intersection with (X^s u Z^t)^2, read off as a split equivalence.
  std::vector<std::pair<BrNode, BrNode>> related;
  auto outer_node = [&](std::size_t id) {
    return id < m ? BrNode{false, static_cast<std::uint32_t>(id)}
                  : BrNode{true, static_cast<std::uint32_t>(id - m - n)};
  };
  std::vector<std::size_t> outer;
  for (std::size_t i = 0; i < m; ++i) outer.push_back(i);
  for (std::size_t j = 0; j < k; ++j) outer.push_back(m + n + j);
  for (std::size_t a : outer)
    for (std::size_t b : outer)
      if (a < b && rel[a][b]) related.push_back({outer_node(a), outer_node(b)});
  SplitEquivalence se = SplitEquivalence::from_pairs(
      static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(k), related);
  std::vector<std::pair<BrNode, BrNode>> pairs;
  for (const auto& block : se.blocks()) {
    if (block.size() != 2) throw Error("compose_oracle: non-Brauerian result");
    pairs.push_back({block[0], block[1]});
  }
  return BrauerArrow(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(k),
                     std::move(pairs));
}

}  // namespace sac::testing
