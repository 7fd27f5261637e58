#include "tclp/exact.hpp"
#include "tclp/geometry.hpp"
#include "tclp/instance.hpp"
#include "tclp/objectives.hpp"
#include "tclp/pareto.hpp"
#include "tclp/rng.hpp"
#include "tclp/tcla.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

tclp::Instance make(std::size_t n, std::size_t m, std::size_t k) {
    return tclp::generate_random({n, m, k, 1500.0, 1000.0, 10, 100, 1});
}

void BM_Evaluate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const tclp::Instance inst = make(n, n / 5, n / 20);
    const tclp::Solution sol(tclp::unrank_subset(0, inst.m(), inst.k()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tclp::evaluate(inst, sol));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Evaluate)->Arg(100)->Arg(500)->Arg(2000);

void BM_ExchangeDelta(benchmark::State& state) {
    const tclp::Instance inst = make(500, 100, 50);
    tclp::ObjectiveEvaluator evaluator(inst);
    const tclp::Solution parent(tclp::unrank_subset(12345, inst.m(), inst.k()));
    std::vector<std::uint32_t> assignment;
    evaluator.evaluate(parent.centers(), &assignment);
    std::uint32_t added = 0;
    while (parent.contains(added)) {
        ++added;
    }
    const std::uint32_t removed = parent.centers()[0];
    const tclp::Solution child = parent.exchanged(0, added);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluator.exchange(child.centers(), assignment, removed, added));
    }
}
BENCHMARK(BM_ExchangeDelta);

void BM_Delaunay(benchmark::State& state) {
    tclp::Rng rng(3);
    std::vector<tclp::Point> pts;
    for (std::int64_t i = 0; i < state.range(0); ++i) {
        pts.push_back({rng.unit() * 1500.0, rng.unit() * 1000.0});
    }
    for (auto _ : state) {
        tclp::VoronoiIndex index(pts);
        benchmark::DoNotOptimize(index.neighbors(0).size());
    }
}
BENCHMARK(BM_Delaunay)->Arg(25)->Arg(100)->Arg(400);

void BM_NondominatedFronts(benchmark::State& state) {
    tclp::Rng rng(4);
    std::vector<tclp::ObjectivePair> pts;
    for (std::int64_t i = 0; i < state.range(0); ++i) {
        pts.push_back({rng.between(0, 200), rng.unit() * 500.0});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(tclp::nondominated_fronts(pts));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NondominatedFronts)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_TclaGenerations(benchmark::State& state) {
    const tclp::Instance inst = make(100, 25, 8);
    tclp::TclaParams params;
    params.auto_size = false;
    params.population_size = 200;
    params.generations = static_cast<std::size_t>(state.range(0));
    params.record_history = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tclp::run_tcla(inst, params).evaluations);
    }
}
BENCHMARK(BM_TclaGenerations)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
