// Microbenchmarks: normal-form multiplication, ball growth, and the
// pushdown word problem, all on the C2 * C3 fixture (exponential growth,
// the stress case for the oracle).

#include <random>

#include <benchmark/benchmark.h>

#include "vfree/dehn.hpp"
#include "vfree/io.hpp"
#include "vfree/oracle.hpp"

using namespace vfree;

namespace {

constructed_group make_c2c3() {
  return build(parse_graph(nlohmann::json::parse(R"({
    "vertices": [
      {"elements": ["1", "a"], "table": [[0, 1], [1, 0]]},
      {"elements": ["1", "b", "B"],
       "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}
    ],
    "edges": [{"ends": [0, 1]}]
  })")));
}

word random_word(const alphabet& a, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, a.size() - 1);
  word w(len);
  for (auto& l : w) l = pick(rng);
  return w;
}

void bm_multiply(benchmark::State& state) {
  auto g = make_c2c3();
  std::mt19937_64 rng(7);
  group_elem a = g.gens.evaluate(random_word(g.gens.x, rng, state.range(0)));
  group_elem b = g.gens.evaluate(random_word(g.gens.x, rng, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g.gens.top->mul(a, b));
}
BENCHMARK(bm_multiply)->Arg(8)->Arg(32)->Arg(128);

void bm_ball_growth(benchmark::State& state) {
  auto g = make_c2c3();
  for (auto _ : state) {
    geodesic_oracle o(g.gens);
    o.grow(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(o.ball_size());
  }
}
BENCHMARK(bm_ball_growth)->Arg(8)->Arg(12)->Arg(16);

void bm_word_problem(benchmark::State& state) {
  auto g = make_c2c3();
  geodesic_oracle o(g.gens);
  auto sys = dehn_system::synthesize(o, g.k(), /*certified=*/true);
  std::mt19937_64 rng(7);
  word w = random_word(g.gens.x, rng, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(word_problem(sys, w).is_identity);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_word_problem)->Arg(32)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
