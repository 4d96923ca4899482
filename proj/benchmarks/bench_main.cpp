#include <benchmark/benchmark.h>

#include "tedpoly/extremality.hpp"
#include "tedpoly/facets.hpp"
#include "tedpoly/hamilton.hpp"

using namespace tedpoly;

static void BM_RationalDot(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Rational> a;
    std::vector<Rational> b;
    for (std::size_t k = 0; k < n; ++k)
    {
        a.emplace_back(static_cast<long>(k) + 1, 7);
        b.emplace_back(3, static_cast<long>(k) + 2);
    }
    const ExactVector va(a);
    const ExactVector vb(b);
    for (auto _ : state)
        benchmark::DoNotOptimize(dot(va, vb));
}
BENCHMARK(BM_RationalDot)->Arg(16)->Arg(36);

static void BM_BuildPointSet(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_point_set(n, Epsilon(Rational(5))));
}
BENCHMARK(BM_BuildPointSet)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_IsExtreme(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PointSet ps = build_point_set(n, Epsilon(Rational(1)));
    std::size_t i = 0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(is_extreme(i, ps));
        i = (i + 7) % ps.size();
    }
}
BENCHMARK(BM_IsExtreme)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_LpDecide(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PointSet ps = build_point_set(n, Epsilon(Rational(1)));
    const Digraph g = Digraph::complete(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(lp_decide_unchecked(g, ps));
}
BENCHMARK(BM_LpDecide)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_FacetsFour(benchmark::State& state)
{
    const auto pts = project(build_point_set(4, Epsilon(Rational(1))));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_facets(pts));
}
BENCHMARK(BM_FacetsFour)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
