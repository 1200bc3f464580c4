#include "ec/arrkit.hpp"
#include "ec/detcount.hpp"
#include "ec/ehrhartkit.hpp"
#include "ec/graphcount.hpp"
#include "ec/matroidkit.hpp"
#include "ec/posetkit.hpp"
#include "ec/powser.hpp"

#include <benchmark/benchmark.h>

using namespace ec;

static void BM_SeriesInverse(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    Series s = Series::from_poly(Poly({Rational(1), Rational(-1), Rational(-1)}), order);
    for (auto _ : state) benchmark::DoNotOptimize(ps_inverse(s));
}
BENCHMARK(BM_SeriesInverse)->Arg(50)->Arg(200);

static void BM_SeriesExp(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    Series s = Series::x(order);
    for (auto _ : state) benchmark::DoNotOptimize(ps_exp(s));
}
BENCHMARK(BM_SeriesExp)->Arg(50)->Arg(200);

static void BM_Kasteleyn(benchmark::State& state) {
    GridRegion r = GridRegion::rectangle(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kasteleyn_match_count(r));
}
BENCHMARK(BM_Kasteleyn)->Arg(4)->Arg(8);

static void BM_AztecCondensation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(aztec_count(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AztecCondensation)->Arg(10)->Arg(30);

static void BM_SpanningTrees(benchmark::State& state) {
    Graph g = build_named_graph("cube:" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_count(g));
}
BENCHMARK(BM_SpanningTrees)->Arg(3)->Arg(5);

static void BM_LinearExtensions(benchmark::State& state) {
    Poset p = product(chain_poset(2), chain_poset(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(linear_extensions(p));
}
BENCHMARK(BM_LinearExtensions)->Arg(6)->Arg(10);

static void BM_CharPoly(benchmark::State& state) {
    Arrangement a = build_named_arrangement("shi:3");
    auto backend = static_cast<CharPolyBackend>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(a, backend));
}
BENCHMARK(BM_CharPoly)
    ->Arg(static_cast<int>(CharPolyBackend::FiniteField))
    ->Arg(static_cast<int>(CharPolyBackend::IntersectionPoset))
    ->Arg(static_cast<int>(CharPolyBackend::Whitney));

static void BM_Tutte(benchmark::State& state) {
    Matroid m = build_named_matroid("graphic:complete:5");
    auto backend = static_cast<TutteBackend>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tutte(m, backend));
}
BENCHMARK(BM_Tutte)
    ->Arg(static_cast<int>(TutteBackend::SubsetSum))
    ->Arg(static_cast<int>(TutteBackend::DeletionContraction))
    ->Arg(static_cast<int>(TutteBackend::Activities));

static void BM_CountPoints(benchmark::State& state) {
    LatticePolytope p = crosspolytope(3);
    for (auto _ : state) benchmark::DoNotOptimize(count_points(p, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_CountPoints)->Arg(5)->Arg(20);

static void BM_EhrhartPolynomial(benchmark::State& state) {
    LatticePolytope p = order_polytope(build_named_poset("grid:2,3"));
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart_polynomial(p));
}
BENCHMARK(BM_EhrhartPolynomial);
BENCHMARK_MAIN();
