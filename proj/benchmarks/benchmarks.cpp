#include "tensorwalk/branching.hpp"
#include "tensorwalk/combinat.hpp"
#include "tensorwalk/fixtures.hpp"
#include "tensorwalk/holonomic.hpp"
#include "tensorwalk/laurent.hpp"
#include "tensorwalk/powerseries.hpp"
#include "tensorwalk/transforms.hpp"
#include "tensorwalk/walks.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace tensorwalk;

void BM_CtSequenceOctant(benchmark::State& state) {
    const auto spec = laurent::builtin_ct_spec("g2");
    for (auto _ : state) {
        auto seq = laurent::ct_sequence(spec, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(seq);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CtSequenceOctant)->Arg(20)->Arg(40)->Arg(60)->Complexity();

void BM_WalkExcursions(benchmark::State& state) {
    const auto cfg = walks::builtin_config("octant_g2", 1);
    for (auto _ : state) {
        auto seq = walks::excursions(cfg, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(seq);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WalkExcursions)->Arg(20)->Arg(40)->Arg(80)->Complexity();

void BM_UnrollT3(benchmark::State& state) {
    const auto rec = fixtures::paper_recurrence("t3_rec");
    for (auto _ : state) {
        auto seq = holonomic::unroll(rec, {1, 0, 1}, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(seq);
    }
}
BENCHMARK(BM_UnrollT3)->Arg(1000)->Arg(4000);

void BM_BinomialTransform(benchmark::State& state) {
    const auto a = holonomic::unroll(fixtures::paper_recurrence("t3_rec"), {1, 0, 1},
                                     static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto b = transforms::bt_power(a, 1);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BinomialTransform)->Arg(100)->Arg(300);

void BM_GuessRecurrence(benchmark::State& state) {
    const auto terms = walks::excursions(walks::builtin_config("octant_g2", 0), 39);
    for (auto _ : state) {
        auto rec = holonomic::guess_recurrence(terms, 4, 3);
        benchmark::DoNotOptimize(rec);
    }
}
BENCHMARK(BM_GuessRecurrence);

void BM_Hypergeometric2F1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto phi = series::rf_to_series(IntPoly({0, 0, 27, 27}), IntPoly({1, -3, 3, -1}), n);
    for (auto _ : state) {
        auto f = series::hypergeom_2f1(BigRational(1, 3), BigRational(2, 3), BigRational(2), phi);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_Hypergeometric2F1)->Arg(30)->Arg(60);

void BM_BranchingTable(benchmark::State& state) {
    for (auto _ : state) {
        auto table = branching::expand_branching_gf(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BranchingTable)->Arg(8)->Arg(16)->Arg(24)->Complexity();

void BM_SetPartitionOracle(benchmark::State& state) {
    combinat::PartitionFilter filter;
    filter.max_enhanced_crossing = 3;
    for (auto _ : state) {
        auto c = combinat::count_set_partitions(static_cast<int>(state.range(0)), filter);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SetPartitionOracle)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
