#include "sac/brauer.hpp"

#include <algorithm>
#include <numeric>

namespace sac {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

void check_node(const BrNode& u, std::uint32_t m, std::uint32_t n) {
  const std::uint32_t bound = u.target ? n : m;
  if (u.index >= bound)
    throw Error("node " + u.str() + " out of range for arrow with sizes " + std::to_string(m) +
                "|-" + std::to_string(n));
}

std::size_t flat_id(const BrNode& u, std::uint32_t m) { return u.target ? m + u.index : u.index; }

}  // namespace

SplitEquivalence::SplitEquivalence(std::uint32_t m, std::uint32_t n,
                                   std::vector<std::vector<BrNode>> blocks)
    : m_(m), n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(m_ + n_, false);
  std::size_t covered = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw Error("split equivalence block must be nonempty");
    std::sort(block.begin(), block.end());
    for (const BrNode& u : block) {
      check_node(u, m_, n_);
      const std::size_t id = flat_id(u, m_);
      if (seen[id]) throw Error("node " + u.str() + " occurs in two blocks");
      seen[id] = true;
      ++covered;
    }
  }
  if (covered != m_ + n_) throw Error("blocks do not cover all nodes");
  std::sort(blocks_.begin(), blocks_.end());
}

SplitEquivalence SplitEquivalence::from_pairs(
    std::uint32_t m, std::uint32_t n, const std::vector<std::pair<BrNode, BrNode>>& pairs) {
  UnionFind uf(m + n);
  for (const auto& [a, b] : pairs) {
    check_node(a, m, n);
    check_node(b, m, n);
    uf.unite(flat_id(a, m), flat_id(b, m));
  }
  std::vector<std::vector<BrNode>> groups(m + n);
  for (std::uint32_t i = 0; i < m + n; ++i) {
    const BrNode u{i >= m, i >= m ? i - m : i};
    groups[uf.find(i)].push_back(u);
  }
  std::vector<std::vector<BrNode>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SplitEquivalence(m, n, std::move(blocks));
}

bool SplitEquivalence::is_brauerian() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const auto& b) { return b.size() == 2; });
}

bool is_brauerian(const SplitEquivalence& s) { return s.is_brauerian(); }

BrauerArrow::BrauerArrow(std::uint32_t m, std::uint32_t n,
                         std::vector<std::pair<BrNode, BrNode>> pairs)
    : m_(m), n_(n), pairs_(std::move(pairs)) {
  if (pairs_.size() * 2 != std::size_t{m_} + n_)
    throw Error("Brauerian arrow must pair up all " + std::to_string(m_ + n_) + " nodes");
  std::vector<bool> seen(m_ + n_, false);
  for (auto& [a, b] : pairs_) {
    check_node(a, m_, n_);
    check_node(b, m_, n_);
    if (b < a) std::swap(a, b);
    if (a == b) throw Error("degenerate block {" + a.str() + "}");
    for (const BrNode& u : {a, b}) {
      const std::size_t id = flat_id(u, m_);
      if (seen[id]) throw Error("node " + u.str() + " occurs in two blocks");
      seen[id] = true;
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
}

BrauerArrow BrauerArrow::identity(std::uint32_t n) {
  std::vector<std::pair<BrNode, BrNode>> pairs;
  pairs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) pairs.push_back({BrNode{false, i}, BrNode{true, i}});
  return BrauerArrow(n, n, std::move(pairs));
}

SplitEquivalence BrauerArrow::as_split_equivalence() const {
  std::vector<std::vector<BrNode>> blocks;
  blocks.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) blocks.push_back({a, b});
  return SplitEquivalence(m_, n_, std::move(blocks));
}

std::string BrauerArrow::to_json() const {
  std::string out = "{\"source\":" + std::to_string(m_) + ",\"target\":" + std::to_string(n_) +
                    ",\"pairs\":[";
  bool first = true;
  for (const auto& [a, b] : pairs_) {
    if (!first) out += ',';
    first = false;
    out += "[\"" + a.str() + "\",\"" + b.str() + "\"]";
  }
  out += "]}";
  return out;
}

BrauerArrow compose(const BrauerArrow& p, const BrauerArrow& r) {
  if (r.target_size() != p.source_size())
    throw Error("compose: middle sizes differ (" + std::to_string(r.target_size()) + " vs " +
                std::to_string(p.source_size()) + ")");
  const std::uint32_t m = r.source_size();
  const std::uint32_t n = r.target_size();
  const std::uint32_t k = p.target_size();
  // Layers: [0,m) r-sources, [m,m+n) middle, [m+n,m+n+k) p-targets.
  UnionFind uf(std::size_t{m} + n + k);
  for (const auto& [a, b] : r.pairs())
    uf.unite(a.target ? m + a.index : a.index, b.target ? m + b.index : b.index);
  for (const auto& [a, b] : p.pairs())
    uf.unite(a.target ? std::size_t{m} + n + a.index : m + a.index,
             b.target ? std::size_t{m} + n + b.index : m + b.index);

  std::vector<std::pair<BrNode, BrNode>> pairs;
  pairs.reserve((std::size_t{m} + k) / 2);
  std::vector<std::int64_t> first_of(std::size_t{m} + n + k, -1);
  auto visit = [&](std::size_t id, const BrNode& u) {
    const std::size_t root = uf.find(id);
    if (first_of[root] < 0) {
      first_of[root] = static_cast<std::int64_t>(id);
    } else {
      const std::size_t other = static_cast<std::size_t>(first_of[root]);
      const BrNode v = other < m ? BrNode{false, static_cast<std::uint32_t>(other)}
                                 : BrNode{true, static_cast<std::uint32_t>(other - m - n)};
      pairs.push_back({v, u});
      first_of[root] = -1;
    }
  };
  for (std::uint32_t i = 0; i < m; ++i) visit(i, BrNode{false, i});
  for (std::uint32_t j = 0; j < k; ++j) visit(std::size_t{m} + n + j, BrNode{true, j});
  for (std::size_t id = 0; id < first_of.size(); ++id)
    if (first_of[id] >= 0) throw Error("compose: inputs are not Brauerian (dangling endpoint)");
  return BrauerArrow(m, k, std::move(pairs));
}

BrauerArrow shifted_union(const BrauerArrow& f, const BrauerArrow& h, std::uint32_t src_off,
                          std::uint32_t tgt_off) {
  if (src_off != f.source_size() || tgt_off != f.target_size())
    throw Error("shifted_union: offsets must equal the left arrow's sizes");
  std::vector<std::pair<BrNode, BrNode>> pairs(f.pairs().begin(), f.pairs().end());
  pairs.reserve(pairs.size() + h.pairs().size());
  auto shift = [&](const BrNode& u) {
    return BrNode{u.target, u.index + (u.target ? tgt_off : src_off)};
  };
  for (const auto& [a, b] : h.pairs()) pairs.push_back({shift(a), shift(b)});
  return BrauerArrow(f.source_size() + h.source_size(), f.target_size() + h.target_size(),
                     std::move(pairs));
}

}  // namespace sac
