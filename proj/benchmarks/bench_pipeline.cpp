#include <benchmark/benchmark.h>

#include "ucyc/ucyc.hpp"

using namespace ucyc;

static void BM_AllForms(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_forms(n, 4));
}
BENCHMARK(BM_AllForms)->Arg(20)->Arg(40)->Arg(60);

static void BM_ListClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(list_classes(n, 4, Filter::AwesomeOnly));
}
BENCHMARK(BM_ListClasses)->Arg(20)->Arg(40);

static void BM_BuildTransition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ClassList cl = list_classes(n, 4, Filter::AwesomeOnly);
    for (auto _ : state) benchmark::DoNotOptimize(build_transition(cl));
}
BENCHMARK(BM_BuildTransition)->Arg(20)->Arg(40);

static void BM_EulerCircuit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TransitionGraph t = build_transition(n, 4, Filter::AwesomeOnly);
    const auto comps = components(t);
    const int mc = main_component(t, comps);
    for (auto _ : state) benchmark::DoNotOptimize(eulerian_circuit(t, comps[mc]));
}
BENCHMARK(BM_EulerCircuit)->Arg(20)->Arg(40);

static void BM_GeneratePacking(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GenerateOptions opts;
    opts.strategy = RepStrategy::Search;
    for (auto _ : state) benchmark::DoNotOptimize(generate_packing(n, 4, opts));
}
BENCHMARK(BM_GeneratePacking)->Arg(16)->Arg(24);

static void BM_Verify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PackingResult pr = generate_packing(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(verify(pr.sequence, n, 4));
}
BENCHMARK(BM_Verify)->Arg(16)->Arg(24);

static void BM_Census(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(n, 4));
}
BENCHMARK(BM_Census)->Arg(12)->Arg(20);

static void BM_PsiPrimeExact(benchmark::State& state) {
    const Pattern p({2, 1, 1});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(psi_prime_exact(p, n));
}
BENCHMARK(BM_PsiPrimeExact)->Arg(100)->Arg(400);
