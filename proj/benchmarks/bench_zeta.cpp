#include <benchmark/benchmark.h>

#include <random>

#include "rzeta/greens.hpp"
#include "rzeta/oracle/dixon.hpp"
#include "rzeta/oracle/verify.hpp"
#include "rzeta/towers.hpp"

using namespace rzeta;
using rzeta::towers::FamilyId;

namespace {

RationalPoly random_poly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = num(rng);
    return RationalPoly(std::move(c));
}

}  // namespace

static void BM_PolyMul(benchmark::State& state) {
    std::mt19937 rng(1);
    RationalPoly a = random_poly(rng, static_cast<int>(state.range(0)));
    RationalPoly b = random_poly(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

static void BM_TypeEnumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(greens::enumerate_types(n));
}
BENCHMARK(BM_TypeEnumeration)->Arg(4)->Arg(6)->Arg(8);

static void BM_GlZetaAssembly(benchmark::State& state) {
    // uncached path: enumerate, divide out every degree, attach counts
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ZetaPoly z;
        for (const auto& t : greens::enumerate_types(n))
            z.add_term(greens::type_degree(t, n), greens::type_count(t));
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_GlZetaAssembly)->Arg(3)->Arg(5)->Arg(6);

static void BM_GZetaCached(benchmark::State& state) {
    towers::g_zeta(6, 5);  // warm the family caches
    for (auto _ : state) benchmark::DoNotOptimize(towers::g_zeta(6, 5));
}
BENCHMARK(BM_GZetaCached);

static void BM_SecondMoment(benchmark::State& state) {
    const ZetaPoly& z = towers::g_zeta(6, 5);
    for (auto _ : state) benchmark::DoNotOptimize(z.second_moment());
}
BENCHMARK(BM_SecondMoment);

static void BM_BuildGroup(benchmark::State& state) {
    oracle::ResidueRing f3(3, 1, oracle::RingKind::IntegersMod);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::build_group(FamilyId::gl(2), f3));
}
BENCHMARK(BM_BuildGroup);

static void BM_ConjugacyClasses(benchmark::State& state) {
    oracle::ResidueRing f3(3, 1, oracle::RingKind::IntegersMod);
    auto base = oracle::build_group(FamilyId::gl(2), f3);
    for (auto _ : state) {
        auto g = base;
        oracle::conjugacy_classes(g);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_ConjugacyClasses);

static void BM_DixonDegrees(benchmark::State& state) {
    oracle::ResidueRing f3(3, 1, oracle::RingKind::IntegersMod);
    auto g = oracle::build_group(FamilyId::gl(2), f3);
    oracle::conjugacy_classes(g);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::dixon_degrees(g));
}
BENCHMARK(BM_DixonDegrees);

static void BM_VerifyEndToEnd(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::compare_with_formula(
            FamilyId::g(2, 2), 2, oracle::RingKind::IntegersMod));
}
BENCHMARK(BM_VerifyEndToEnd);

BENCHMARK_MAIN();
