#include <benchmark/benchmark.h>

#include "momwb/evo.hpp"
#include "momwb/experiment.hpp"
#include "momwb/extreme.hpp"
#include "momwb/generator.hpp"

using namespace momwb;

namespace {

// Graph sizes mirror the experiment instances: edges ~ 3 * vertices.
WeightedInstance graph(std::int64_t vertices, std::size_t k = 2)
{
    Rng rng(static_cast<std::uint64_t>(vertices) * 7919 + k);
    auto const v = static_cast<std::size_t>(vertices);
    return gen_instance(v, 3 * v, k, 100, rng);
}

void BM_Greedy(benchmark::State& state)
{
    auto const inst = graph(state.range(0));
    TradeOff const lambda = parse_tradeoff("3 7 / 10");
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalarized_keys(inst, lambda));
    }
}
BENCHMARK(BM_Greedy)->Arg(11)->Arg(16)->Arg(40);

void BM_ExtremeBiobjective(benchmark::State& state)
{
    auto const inst = graph(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(extreme_biobjective(inst));
    }
}
BENCHMARK(BM_ExtremeBiobjective)->Arg(11)->Arg(16)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ExtremeThreeObjectives(benchmark::State& state)
{
    auto const inst = graph(state.range(0), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extreme_k(inst));
    }
}
BENCHMARK(BM_ExtremeThreeObjectives)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_MutateEvaluate(benchmark::State& state)
{
    auto const inst = graph(state.range(0));
    Rng rng(42);
    auto x = random_solution(inst.ground_size(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(inst, standard_bit_mutation(x, rng)));
    }
}
BENCHMARK(BM_MutateEvaluate)->Arg(11)->Arg(16)->Arg(40);

void BM_MoeadGeneration(benchmark::State& state)
{
    auto const prepared = prepare_instance("bench", graph(state.range(0)));
    MoeadState moead(prepared.instance, prepared.sufficient, prepared.sufficient.size(), 7);
    for (auto _ : state) {
        moead.step();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * moead.subproblems()));
}
BENCHMARK(BM_MoeadGeneration)->Arg(11)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
