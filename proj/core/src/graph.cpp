#include "sac/graph.hpp"

#include <unordered_map>

namespace sac {

namespace {

std::uint32_t letters(const Formula& a) { return static_cast<std::uint32_t>(a.letter_count()); }

BrauerArrow identity_on(const Formula& source) { return BrauerArrow::identity(letters(source)); }

}  // namespace

BrauerArrow generator_graph(const ArrowTerm& gen) {
  switch (gen.kind()) {
    case ArrowTerm::Kind::id:
    case ArrowTerm::Kind::assoc:
    case ArrowTerm::Kind::dist:
    case ArrowTerm::Kind::unit_del:
      return identity_on(type_of(gen).source);
    case ArrowTerm::Kind::sym: {
      const std::uint32_t ga = letters(gen.formula(0));
      const std::uint32_t gb = letters(gen.formula(1));
      std::vector<std::pair<BrNode, BrNode>> pairs;
      pairs.reserve(ga + gb);
      if (gen.conn() == Conn::conj) {
        // A & B |- B & A : A's letters move right by GB, B's left by GA.
        for (std::uint32_t u = 0; u < ga; ++u) pairs.push_back({{false, u}, {true, u + gb}});
        for (std::uint32_t u = 0; u < gb; ++u) pairs.push_back({{false, ga + u}, {true, u}});
      } else {
        // B | A |- A | B : B's letters move right by GA, A's left by GB.
        for (std::uint32_t u = 0; u < gb; ++u) pairs.push_back({{false, u}, {true, u + ga}});
        for (std::uint32_t u = 0; u < ga; ++u) pairs.push_back({{false, gb + u}, {true, u}});
      }
      return BrauerArrow(ga + gb, ga + gb, std::move(pairs));
    }
    case ArrowTerm::Kind::delta_conj: {
      // A |- A & (~B | B): straight strands on A, caps pairing the two copies of B.
      const std::uint32_t gb = letters(gen.formula(0));
      const std::uint32_t ga = letters(gen.formula(1));
      std::vector<std::pair<BrNode, BrNode>> pairs;
      pairs.reserve(ga + gb);
      for (std::uint32_t u = 0; u < ga; ++u) pairs.push_back({{false, u}, {true, u}});
      for (std::uint32_t u = 0; u < gb; ++u)
        pairs.push_back({{true, ga + u}, {true, ga + gb + u}});
      return BrauerArrow(ga, ga + 2 * gb, std::move(pairs));
    }
    case ArrowTerm::Kind::sigma_disj: {
      // (B & ~B) | A |- A: cups pairing the two copies of B, strands on A.
      const std::uint32_t gb = letters(gen.formula(0));
      const std::uint32_t ga = letters(gen.formula(1));
      std::vector<std::pair<BrNode, BrNode>> pairs;
      pairs.reserve(ga + gb);
      for (std::uint32_t u = 0; u < gb; ++u)
        pairs.push_back({{false, u}, {false, gb + u}});
      for (std::uint32_t u = 0; u < ga; ++u)
        pairs.push_back({{false, 2 * gb + u}, {true, u}});
      return BrauerArrow(2 * gb + ga, ga, std::move(pairs));
    }
    case ArrowTerm::Kind::comp:
    case ArrowTerm::Kind::tens:
      throw Error("generator_graph on a composite term");
  }
  throw Error("unreachable");
}

namespace {

BrauerArrow graph_rec(const ArrowTerm& f,
                      std::unordered_map<const void*, BrauerArrow>& memo) {
  auto it = memo.find(f.node_id());
  if (it != memo.end()) return it->second;
  BrauerArrow out = [&] {
    switch (f.kind()) {
      case ArrowTerm::Kind::comp:
        return compose(graph_rec(f.fst(), memo), graph_rec(f.snd(), memo));
      case ArrowTerm::Kind::tens: {
        BrauerArrow gf = graph_rec(f.fst(), memo);
        BrauerArrow gg = graph_rec(f.snd(), memo);
        return shifted_union(gf, gg, gf.source_size(), gf.target_size());
      }
      default:
        return generator_graph(f);
    }
  }();
  memo.emplace(f.node_id(), out);
  return out;
}

}  // namespace

BrauerArrow graph_of(const ArrowTerm& f) {
  type_of(f);  // reject ill-typed terms up front
  std::unordered_map<const void*, BrauerArrow> memo;
  return graph_rec(f, memo);
}

}  // namespace sac
