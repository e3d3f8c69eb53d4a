#include <benchmark/benchmark.h>

#include <belt/belt.hpp>

using namespace belt;

namespace {

// A representative benchmark job: default profile shape, fixed seed.
Instance corpus_like_instance(std::uint64_t seed) {
  CorpusProfile profile;
  Rng rng(seed);
  return generate_instance(profile, rng);
}

void BM_DecodeLiteral(benchmark::State& state) {
  Instance inst = corpus_like_instance(static_cast<std::uint64_t>(state.range(0)));
  Rng rng(7);
  InjectionSequence seq = uniform_sequence(inst, rng);
  for (auto _ : state) {
    BeltAssignment b = decode(inst, seq);
    benchmark::DoNotOptimize(b.steps().data());
  }
  state.SetItemsProcessed(state.iterations() * inst.total_demand());
}
BENCHMARK(BM_DecodeLiteral)->Arg(1)->Arg(2)->Arg(3);

void BM_EvaluateMakespan(benchmark::State& state) {
  Instance inst = corpus_like_instance(static_cast<std::uint64_t>(state.range(0)));
  Rng rng(7);
  InjectionSequence seq = uniform_sequence(inst, rng);
  MakespanEvaluator eval(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(seq));
  }
  state.SetItemsProcessed(state.iterations() * inst.total_demand());
}
BENCHMARK(BM_EvaluateMakespan)->Arg(1)->Arg(2)->Arg(3);

void BM_UniformDraw(benchmark::State& state) {
  Instance inst = corpus_like_instance(1);
  Rng rng(7);
  for (auto _ : state) {
    InjectionSequence seq = uniform_sequence(inst, rng);
    benchmark::DoNotOptimize(seq.entries.data());
  }
}
BENCHMARK(BM_UniformDraw);

void BM_WeightedDraw(benchmark::State& state) {
  Instance inst = corpus_like_instance(1);
  Rng rng(7);
  for (auto _ : state) {
    InjectionSequence seq = nr_sequence(inst, rng);
    benchmark::DoNotOptimize(seq.entries.data());
  }
}
BENCHMARK(BM_WeightedDraw);

void BM_LocalSearch(benchmark::State& state) {
  Instance inst = corpus_like_instance(1);
  Rng draw(7);
  InjectionSequence start = uniform_sequence(inst, draw);
  SearchParams params{state.range(0), 10};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    SolveResult res = local_search(inst, start, params, rng);
    benchmark::DoNotOptimize(res.best_makespan);
  }
}
BENCHMARK(BM_LocalSearch)->Arg(1)->Arg(10);

void BM_RandomRestarts(benchmark::State& state) {
  Instance inst = corpus_like_instance(1);
  Budget budget{state.range(0), std::nullopt};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SolveResult res = run_restarts(inst, Generator::weighted, {10, 10}, budget, seed++);
    benchmark::DoNotOptimize(res.best_makespan);
  }
}
BENCHMARK(BM_RandomRestarts)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
