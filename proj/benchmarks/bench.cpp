#include <benchmark/benchmark.h>

#include "knots/braid.hpp"
#include "knots/dnlab.hpp"
#include "knots/invariants.hpp"
#include "knots/moves.hpp"
#include "knots/unknotting.hpp"

namespace {

void bm_closure(benchmark::State& state) {
  auto w = knots::dn_word(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(knots::closure(w));
}
BENCHMARK(bm_closure)->Arg(4)->Arg(8)->Arg(12);

void bm_bracket(benchmark::State& state) {
  auto d = knots::closure(knots::dn_word(int(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(knots::bracket(d, 64));
}
BENCHMARK(bm_bracket)->Arg(3)->Arg(5)->Arg(7);

void bm_enumerate_moves(benchmark::State& state) {
  auto d = knots::closure(knots::dn_word(int(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(knots::enumerate_moves(d));
}
BENCHMARK(bm_enumerate_moves)->Arg(4)->Arg(8)->Arg(12);

void bm_unknotting_sequence(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(knots::unknotting_sequence(n));
}
BENCHMARK(bm_unknotting_sequence)->Arg(4)->Arg(8)->Arg(12);

void bm_replay_sequence(benchmark::State& state) {
  int n = int(state.range(0));
  auto d = knots::dn_diagram(n);
  auto seq = knots::unknotting_sequence(n);
  for (auto _ : state) benchmark::DoNotOptimize(knots::replay(d, seq));
}
BENCHMARK(bm_replay_sequence)->Arg(4)->Arg(8)->Arg(12);

void bm_census(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(knots::dn_census(n, false));
}
BENCHMARK(bm_census)->Arg(2)->Arg(4)->Arg(6);

void bm_simplify_greedy(benchmark::State& state) {
  auto d = knots::dn_diagram(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(knots::simplify_greedy(d, 8));
}
BENCHMARK(bm_simplify_greedy)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
