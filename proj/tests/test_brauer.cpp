#include <doctest.h>

#include "sac/brauer.hpp"
#include "sac/sample.hpp"
#include "support/compose_oracle.hpp"

using namespace sac;
using sac::testing::compose_oracle;

namespace {

BrauerArrow arrow(std::uint32_t m, std::uint32_t n,
                  std::vector<std::pair<BrNode, BrNode>> pairs) {
  return BrauerArrow(m, n, std::move(pairs));
}

constexpr BrNode S(std::uint32_t i) { return BrNode{false, i}; }
constexpr BrNode T(std::uint32_t i) { return BrNode{true, i}; }

// The worked 3 |- 9 |- 1 composition.
BrauerArrow worked_r() {
  return arrow(3, 9,
               {{S(0), T(0)}, {S(1), T(3)}, {S(2), T(6)},
                {T(1), T(2)}, {T(4), T(5)}, {T(7), T(8)}});
}
BrauerArrow worked_p() {
  return arrow(9, 1, {{S(2), T(0)}, {S(0), S(1)}, {S(3), S(4)}, {S(5), S(6)}, {S(7), S(8)}});
}

}  // namespace

TEST_CASE("identity arrows") {
  CHECK(BrauerArrow::identity(0).pairs().empty());
  CHECK(BrauerArrow::identity(2) == arrow(2, 2, {{S(0), T(0)}, {S(1), T(1)}}));
  CHECK(BrauerArrow::identity(3) == arrow(3, 3, {{S(0), T(0)}, {S(1), T(1)}, {S(2), T(2)}}));
}

TEST_CASE("canonical form is order-insensitive") {
  CHECK(arrow(2, 2, {{T(1), S(1)}, {T(0), S(0)}}) == BrauerArrow::identity(2));
  CHECK(arrow(2, 2, {{S(0), T(1)}, {S(1), T(0)}}) != BrauerArrow::identity(2));
}

TEST_CASE("partition invariants are enforced") {
  CHECK_THROWS_AS(arrow(2, 2, {{S(0), T(0)}, {S(0), T(1)}}), Error);   // reused node
  CHECK_THROWS_AS(arrow(2, 2, {{S(0), T(0)}}), Error);                 // uncovered nodes
  CHECK_THROWS_AS(arrow(1, 1, {{S(0), S(0)}}), Error);                 // degenerate block
  CHECK_THROWS_AS(arrow(1, 0, {{S(0), T(0)}}), Error);                 // out of range
}

TEST_CASE("worked composition example") {
  BrauerArrow pr = compose(worked_p(), worked_r());
  CHECK(pr == arrow(3, 1, {{S(0), T(0)}, {S(1), S(2)}}));
  CHECK(pr == compose_oracle(worked_p(), worked_r()));
  CHECK(pr.to_json() ==
        R"({"source":3,"target":1,"pairs":[["s0","t0"],["s1","s2"]]})");
}

TEST_CASE("identity laws on the worked example") {
  BrauerArrow r = worked_r();
  CHECK(compose(BrauerArrow::identity(9), r) == r);
  CHECK(compose(r, BrauerArrow::identity(3)) == r);
}

TEST_CASE("composition of inverse crossings is the identity") {
  // G c&_{p,q} and G c&_{q,p} with one letter on each side.
  BrauerArrow c_pq = arrow(2, 2, {{S(0), T(1)}, {S(1), T(0)}});
  BrauerArrow c_qp = arrow(2, 2, {{S(0), T(1)}, {S(1), T(0)}});
  CHECK(compose(c_qp, c_pq) == BrauerArrow::identity(2));
  CHECK(compose_oracle(c_qp, c_pq) == BrauerArrow::identity(2));
}

TEST_CASE("closed middle loops are dropped") {
  // r sends everything into a middle cap; p caps it back: a loop plus a strand.
  BrauerArrow r = arrow(2, 2, {{S(0), S(1)}, {T(0), T(1)}});
  BrauerArrow p = arrow(2, 2, {{S(0), S(1)}, {T(0), T(1)}});
  CHECK(compose(p, r) == arrow(2, 2, {{S(0), S(1)}, {T(0), T(1)}}));
}

TEST_CASE("shifted union") {
  BrauerArrow strand = arrow(1, 1, {{S(0), T(0)}});
  CHECK(shifted_union(strand, strand, 1, 1) == BrauerArrow::identity(2));

  BrauerArrow cross = arrow(2, 2, {{S(0), T(1)}, {S(1), T(0)}});
  CHECK(shifted_union(BrauerArrow::identity(2), cross, 2, 2) ==
        arrow(4, 4, {{S(0), T(0)}, {S(1), T(1)}, {S(2), T(3)}, {S(3), T(2)}}));

  BrauerArrow empty = arrow(0, 0, {});
  CHECK(shifted_union(empty, cross, 0, 0) == cross);
  CHECK_THROWS_AS(shifted_union(strand, strand, 0, 1), Error);
}

TEST_CASE("is_brauerian") {
  CHECK(is_brauerian(BrauerArrow::identity(2).as_split_equivalence()));
  SplitEquivalence three(1, 2, {{S(0), T(0), T(1)}});
  CHECK_FALSE(is_brauerian(three));
  CHECK(is_brauerian(compose(worked_p(), worked_r()).as_split_equivalence()));
}

TEST_CASE("random compositions agree with the transitive-closure oracle") {
  Rng rng(20240817);
  for (int i = 0; i < 300; ++i) {
    const auto m = static_cast<std::uint32_t>(rng() % 9);
    const auto n = static_cast<std::uint32_t>(m % 2 == 0 ? 2 * (rng() % 5) : 2 * (rng() % 4) + 1);
    const auto k = static_cast<std::uint32_t>(n % 2 == 0 ? 2 * (rng() % 5) : 2 * (rng() % 4) + 1);
    BrauerArrow r = random_brauer(rng, m, n);
    BrauerArrow p = random_brauer(rng, r.target_size(), k);
    BrauerArrow fast = compose(p, r);
    CHECK(fast == compose_oracle(p, r));
    CHECK(fast.as_split_equivalence().is_brauerian());
  }
}

TEST_CASE("random associativity and identity laws") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto m = static_cast<std::uint32_t>(rng() % 9);
    const auto n = static_cast<std::uint32_t>(m % 2 == 0 ? 2 * (rng() % 5) : 2 * (rng() % 4) + 1);
    const auto k = static_cast<std::uint32_t>(n % 2 == 0 ? 2 * (rng() % 5) : 2 * (rng() % 4) + 1);
    const auto l = static_cast<std::uint32_t>(k % 2 == 0 ? 2 * (rng() % 5) : 2 * (rng() % 4) + 1);
    BrauerArrow r = random_brauer(rng, m, n);
    BrauerArrow p = random_brauer(rng, r.target_size(), k);
    BrauerArrow t = random_brauer(rng, p.target_size(), l);
    CHECK(compose(t, compose(p, r)) == compose(compose(t, p), r));
    CHECK(compose(BrauerArrow::identity(r.target_size()), r) == r);
    CHECK(compose(r, BrauerArrow::identity(r.source_size())) == r);
  }
}
