// Microbenchmarks for the hot paths: the two census engines, bracket
// arithmetic, Weyl orbit sweeps, and the branching decompositions.
#include "enlattice/branching.hpp"
#include "enlattice/census.hpp"
#include "enlattice/liealg.hpp"
#include "enlattice/rootsys.hpp"

#include <benchmark/benchmark.h>

using namespace enlattice;

namespace {

void BM_CensusLinesDescent(benchmark::State& state) {
    auto lat = make_lattice(static_cast<int>(state.range(0)));
    ClassQuery q;
    q.self_int = -1;
    q.k_int = -1;
    for (auto _ : state) {
        auto v = enumerate_classes(lat, q, EnumEngine::Descent);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CensusLinesDescent)->Arg(6)->Arg(7)->Arg(8);

void BM_CensusLinesReduction(benchmark::State& state) {
    auto lat = make_lattice(static_cast<int>(state.range(0)));
    ClassQuery q;
    q.self_int = -1;
    q.k_int = -1;
    for (auto _ : state) {
        auto v = enumerate_classes(lat, q, EnumEngine::Reduction);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CensusLinesReduction)->Arg(6)->Arg(7)->Arg(8);

void BM_CensusRootsDescent(benchmark::State& state) {
    auto lat = make_lattice(static_cast<int>(state.range(0)));
    ClassQuery q;
    q.self_int = -2;
    q.k_int = 0;
    for (auto _ : state) {
        auto v = enumerate_classes(lat, q, EnumEngine::Descent);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CensusRootsDescent)->Arg(7)->Arg(8);

void BM_BracketRootPairs(benchmark::State& state) {
    auto lat = make_lattice(static_cast<int>(state.range(0)));
    auto alg = build_lie_algebra(lat);
    const auto& roots = alg.system.roots;
    for (auto _ : state) {
        for (size_t i = 0; i + 1 < roots.size(); i += 2) {
            auto z = bracket(alg, alg.root_vector(roots[i]), alg.root_vector(roots[i + 1]));
            benchmark::DoNotOptimize(z);
        }
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(roots.size() / 2));
}
BENCHMARK(BM_BracketRootPairs)->Arg(6)->Arg(8);

void BM_WeylOrbitLines(benchmark::State& state) {
    auto lat = make_lattice(static_cast<int>(state.range(0)));
    auto sys = build_root_system(lat);
    auto seed = class_L(lat, 1);
    for (auto _ : state) {
        auto orbit = weyl_orbit(seed, sys);
        benchmark::DoNotOptimize(orbit);
    }
}
BENCHMARK(BM_WeylOrbitLines)->Arg(6)->Arg(7)->Arg(8);

void BM_FixedLineBranch(benchmark::State& state) {
    auto lat = make_lattice(static_cast<int>(state.range(0)));
    auto seed = class_L(lat, 1);
    for (auto _ : state) {
        auto res = decompose_fixed_line(lat, seed);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_FixedLineBranch)->Arg(6)->Arg(7)->Arg(8);

void BM_FindTriangles(benchmark::State& state) {
    auto lat = make_lattice(6);
    for (auto _ : state) {
        auto gons = find_dgons(lat, 3);
        benchmark::DoNotOptimize(gons);
    }
}
BENCHMARK(BM_FindTriangles);

} // namespace

BENCHMARK_MAIN();
