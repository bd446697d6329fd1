#include <benchmark/benchmark.h>

#include <loopcut/generators.hpp>
#include <loopcut/oracle.hpp>
#include <loopcut/random_fvs.hpp>
#include <loopcut/reductions.hpp>
#include <loopcut/rng.hpp>

namespace {

using namespace loopcut;

MultiGraph make_graph(std::size_t n, std::size_t m, bool weighted) {
    CorpusSpec spec;
    spec.n_vertices = n;
    spec.n_edges = m;
    spec.domain_lo = 2;
    spec.domain_hi = 6;
    RandomStream rng(42);
    return gen_random_graph(spec, rng, weighted);
}

void BM_reduce_branchy(benchmark::State& state) {
    const MultiGraph g = make_graph(static_cast<std::size_t>(state.range(0)),
                                    static_cast<std::size_t>(state.range(0)) * 2, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_to_branchy(g));
    }
}
BENCHMARK(BM_reduce_branchy)->Arg(32)->Arg(128)->Arg(512);

void BM_sample_vertex(benchmark::State& state) {
    const MultiGraph g = make_graph(256, 512, true);
    RandomStream rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_vertex(g, SelectionMode::DegreeOverWeight, rng));
    }
}
BENCHMARK(BM_sample_vertex);

void BM_single_wguess_ii(benchmark::State& state) {
    const MultiGraph g = make_graph(static_cast<std::size_t>(state.range(0)),
                                    static_cast<std::size_t>(state.range(0)) * 2, true);
    RandomStream rng(7);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(single_wguess_ii(g, rng.substream(i++)));
    }
}
BENCHMARK(BM_single_wguess_ii)->Arg(32)->Arg(128);

void BM_wra(benchmark::State& state) {
    const MultiGraph g = make_graph(24, 40, true);
    RandomStream rng(7);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wra(g, 1.0, 25, rng.substream(i++)));
    }
}
BENCHMARK(BM_wra);

void BM_oracle(benchmark::State& state) {
    const MultiGraph g = make_graph(static_cast<std::size_t>(state.range(0)),
                                    static_cast<std::size_t>(state.range(0)) * 2, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_min_wfvs(g, 20));
    }
}
BENCHMARK(BM_oracle)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
