// Parallel kernels against their serial references on the largest automata the
// verifier builds: subset construction of star-of-intersection NFAs, and
// partition refinement of the resulting DFAs.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "scw/bounds.hpp"
#include "scw/constructions.hpp"
#include "scw/determinize.hpp"
#include "scw/minimize.hpp"
#include "scw/verifier.hpp"

namespace {

// (K∩L)* with the five-letter witnesses; 3:4, 3:5 and 4:4 give 3072, 24576
// and 49152 reachable subsets.
scw::EpsNfa star_of_meet(std::size_t m, std::size_t n) {
    const auto operands = scw::build_operands(scw::recipe(scw::OperationId::StarOfIntersection, m, n));
    return scw::star_nfa(scw::minimize(product_dfa(*operands.left, operands.right, scw::BooleanOp::Intersection)));
}

void BM_determinize_serial(benchmark::State& state) {
    const auto nfa = star_of_meet(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(scw::determinize_serial(nfa));
}

void BM_determinize_parallel(benchmark::State& state) {
    const auto nfa = star_of_meet(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(scw::determinize(nfa));
    state.counters["threads"] = omp_get_max_threads();
}

template <scw::Partition (*Refine)(const scw::Dfa&)>
void BM_refine(benchmark::State& state) {
    const auto d = scw::determinize(star_of_meet(state.range(0), state.range(1))).dfa();
    for (auto _ : state) benchmark::DoNotOptimize(Refine(d));
    state.counters["states"] = static_cast<double>(d.size());
}

void pairs(benchmark::internal::Benchmark* b) { b->Args({3, 4})->Args({3, 5})->Args({4, 4})->Unit(benchmark::kMillisecond); }

}  // namespace

BENCHMARK(BM_determinize_serial)->Apply(pairs);
BENCHMARK(BM_determinize_parallel)->Apply(pairs);
BENCHMARK(BM_refine<scw::refine_moore_serial>)->Name("BM_refine_moore_serial")->Apply(pairs);
BENCHMARK(BM_refine<scw::refine_moore>)->Name("BM_refine_moore_parallel")->Apply(pairs);
BENCHMARK(BM_refine<scw::refine_hopcroft>)->Name("BM_refine_hopcroft")->Apply(pairs);

BENCHMARK_MAIN();
