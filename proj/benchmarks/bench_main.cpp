#include <benchmark/benchmark.h>

#include "sac/cutelim.hpp"
#include "sac/graph.hpp"
#include "sac/sample.hpp"

using namespace sac;

namespace {

std::vector<std::pair<BrauerArrow, BrauerArrow>> composable_pairs(std::uint32_t size,
                                                                  std::size_t count) {
  Rng rng(1);
  std::vector<std::pair<BrauerArrow, BrauerArrow>> out;
  for (std::size_t i = 0; i < count; ++i) {
    BrauerArrow r = random_brauer(rng, size, size);
    BrauerArrow p = random_brauer(rng, r.target_size(), size);
    out.emplace_back(std::move(p), std::move(r));
  }
  return out;
}

void bm_compose(benchmark::State& state) {
  const auto pairs = composable_pairs(static_cast<std::uint32_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, r] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(compose(p, r));
  }
}
BENCHMARK(bm_compose)->Arg(8)->Arg(64)->Arg(512);

void bm_graph_of(benchmark::State& state) {
  Rng rng(2);
  SampleOptions opts;
  opts.term_depth = static_cast<std::size_t>(state.range(0));
  std::vector<ArrowTerm> terms;
  for (int i = 0; i < 32; ++i) terms.push_back(random_term(rng, opts));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_of(terms[i++ % terms.size()]));
  }
}
BENCHMARK(bm_graph_of)->Arg(3)->Arg(5);

void bm_gentzenize(benchmark::State& state) {
  Rng rng(3);
  SampleOptions opts;
  std::vector<ArrowTerm> terms;
  for (int i = 0; i < 32; ++i) terms.push_back(random_term(rng, opts));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gentzenize(terms[i++ % terms.size()]));
  }
}
BENCHMARK(bm_gentzenize);

void bm_eliminate(benchmark::State& state) {
  Rng rng(4);
  SampleOptions opts;
  opts.max_letters = 3;
  std::vector<GentzenTerm> nets;
  for (int i = 0; i < 16; ++i) nets.push_back(random_net(rng, 2, opts));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eliminate(nets[i++ % nets.size()]));
  }
}
BENCHMARK(bm_eliminate);

}  // namespace

BENCHMARK_MAIN();
