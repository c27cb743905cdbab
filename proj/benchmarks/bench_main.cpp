#include <benchmark/benchmark.h>

#include "tmk/audit.hpp"
#include "tmk/fii.hpp"
#include "tmk/generators.hpp"
#include "tmk/kernelizer.hpp"
#include "tmk/solvers.hpp"
#include "tmk/sparsity.hpp"

using namespace tmk;

namespace {

Instance planted(ProblemId p, int n, int k, std::uint64_t seed) {
    GeneratorSpec s;
    s.problem = p;
    s.n = n;
    s.k = k;
    s.d = 4;
    s.seed = seed;
    return generate(s).instance;
}

const TableSet& fvs_tables() {
    static const TableSet tables = [] {
        TableSet t;
        for (int b = 0; b <= 2; ++b) t.by_boundary.emplace(b, build_table(ProblemSpec::fvs(), b, 6));
        return t;
    }();
    return tables;
}

void BM_ExactFvs(benchmark::State& state) {
    const Instance inst = planted(ProblemId::FVS, static_cast<int>(state.range(0)), 6, 1);
    for (auto _ : state) benchmark::DoNotOptimize(exact_solve(ProblemId::FVS, inst.graph, 64).value);
}
BENCHMARK(BM_ExactFvs)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ExactVc(benchmark::State& state) {
    const Instance inst = planted(ProblemId::VC, static_cast<int>(state.range(0)), 6, 1);
    for (auto _ : state) benchmark::DoNotOptimize(exact_solve(ProblemId::VC, inst.graph, 64).value);
}
BENCHMARK(BM_ExactVc)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_BuildFvsTable(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_table(ProblemSpec::fvs(), 2, n_max).classes.size());
}
BENCHMARK(BM_BuildFvsTable)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_TopologicalMinorK5(benchmark::State& state) {
    const Graph g = grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    const Graph h = complete_graph(5);
    for (auto _ : state) benchmark::DoNotOptimize(contains_topological_minor(g, h));
}
BENCHMARK(BM_TopologicalMinorK5)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Kernelize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = planted(ProblemId::FVS, n, 6, 2);
    const TableSet& tables = fvs_tables();
    for (auto _ : state) benchmark::DoNotOptimize(kernelize(inst, tables).kernel.graph.n());
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond);

void BM_Audit(benchmark::State& state) {
    const Instance inst = planted(ProblemId::FVS, static_cast<int>(state.range(0)), 6, 3);
    AuditParams p;
    p.r = 6;
    p.t = 1;
    p.varpi = VarpiLookup::from_tables(fvs_tables());
    for (auto _ : state) benchmark::DoNotOptimize(audit_instance(inst, fvs_tables(), p).report.rows.size());
}
BENCHMARK(BM_Audit)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
