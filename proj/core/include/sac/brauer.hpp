#ifndef SAC_BRAUER_HPP
#define SAC_BRAUER_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sac/error.hpp"

namespace sac {

// A tagged element of the disjoint union of source and target ordinals.
// Sources order before targets; within a tag, by index.
struct BrNode {
  bool target = false;
  std::uint32_t index = 0;
  auto operator<=>(const BrNode&) const = default;
  std::string str() const { return (target ? "t" : "s") + std::to_string(index); }
};

// A general split equivalence m |- n: a partition of the m + n tagged nodes.
// Blocks are kept canonical (each block sorted, blocks sorted by first node).
class SplitEquivalence {
 public:
  SplitEquivalence(std::uint32_t source_size, std::uint32_t target_size,
                   std::vector<std::vector<BrNode>> blocks);

  // Builds the partition generated by a list of related node pairs; nodes not
  // mentioned become singletons.
  static SplitEquivalence from_pairs(std::uint32_t source_size, std::uint32_t target_size,
                                     const std::vector<std::pair<BrNode, BrNode>>& pairs);

  std::uint32_t source_size() const { return m_; }
  std::uint32_t target_size() const { return n_; }
  std::span<const std::vector<BrNode>> blocks() const { return blocks_; }
  bool is_brauerian() const;

  bool operator==(const SplitEquivalence&) const = default;

 private:
  std::uint32_t m_, n_;
  std::vector<std::vector<BrNode>> blocks_;
};

bool is_brauerian(const SplitEquivalence& s);

// A Brauerian split equivalence: every block has exactly two elements.
// Pairs are canonical: each pair ordered, pairs sorted lexicographically.
class BrauerArrow {
 public:
  BrauerArrow(std::uint32_t source_size, std::uint32_t target_size,
              std::vector<std::pair<BrNode, BrNode>> pairs);

  static BrauerArrow identity(std::uint32_t n);

  std::uint32_t source_size() const { return m_; }
  std::uint32_t target_size() const { return n_; }
  std::span<const std::pair<BrNode, BrNode>> pairs() const { return pairs_; }

  SplitEquivalence as_split_equivalence() const;

  bool operator==(const BrauerArrow&) const = default;

  // {"source":m,"target":n,"pairs":[["s0","t0"],...]} in canonical order.
  std::string to_json() const;

 private:
  std::uint32_t m_, n_;
  std::vector<std::pair<BrNode, BrNode>> pairs_;
};

// Composition p * r for r: m |- n and p: n |- k, via union-find over the
// m + n + k nodes with the middle layer identified.
BrauerArrow compose(const BrauerArrow& p, const BrauerArrow& r);

// Disjoint union with h's sources shifted by src_off and targets by tgt_off.
// The offsets must equal f's sizes.
BrauerArrow shifted_union(const BrauerArrow& f, const BrauerArrow& h, std::uint32_t src_off,
                          std::uint32_t tgt_off);

}  // namespace sac

#endif
