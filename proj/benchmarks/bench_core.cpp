// Microbenchmarks for the hot paths: sparse products, the determinant
// substitution behind the identity checks, power cancellation, local
// multiplicity and one modular composition trial.

#include <cremona/family.hpp>
#include <cremona/modular.hpp>
#include <cremona/multiplicity.hpp>
#include <cremona/quartic.hpp>

#include <benchmark/benchmark.h>

using namespace cremona;

static void BM_JPower(benchmark::State& state) {
    Polynomial J = invariant_J(rings::coords());
    unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(J.pow(k));
}
BENCHMARK(BM_JPower)->Arg(4)->Arg(8)->Arg(13);

static void BM_CoordinateProduct(benchmark::State& state) {
    CremonaMap g = build_gt(Rational(1));
    for (auto _ : state) benchmark::DoNotOptimize(g.coords[3] * g.coords[4]);
}
BENCHMARK(BM_CoordinateProduct);

static void BM_HankelOfMap(benchmark::State& state) {
    CremonaMap g = build_gt(Rational(1));
    for (auto _ : state) benchmark::DoNotOptimize(hankel_det(g.coords));
}
BENCHMARK(BM_HankelOfMap)->Unit(benchmark::kMillisecond);

static void BM_BuildFamilyMember(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_gt(Rational(1)));
}
BENCHMARK(BM_BuildFamilyMember)->Unit(benchmark::kMillisecond);

static void BM_CancelJPower(benchmark::State& state) {
    CremonaMap g0 = build_gt(Rational(0));
    for (auto _ : state) benchmark::DoNotOptimize(cancel_J_power(g0.coords));
}
BENCHMARK(BM_CancelJPower)->Unit(benchmark::kMillisecond);

static void BM_MultAtPoint(benchmark::State& state) {
    CremonaMap g = build_gt(Rational(1));
    ProjectivePoint q = point_q();
    for (auto _ : state) benchmark::DoNotOptimize(mult_at_point(g.coords[4], q));
}
BENCHMARK(BM_MultAtPoint)->Unit(benchmark::kMillisecond);

static void BM_MultAlongCurve(benchmark::State& state) {
    CremonaMap g = build_gt(Rational(1));
    ParametrizedCurve B = curve_B();
    for (auto _ : state) benchmark::DoNotOptimize(mult_along_curve(g.coords[1], B));
}
BENCHMARK(BM_MultAlongCurve)->Unit(benchmark::kMillisecond);

static void BM_ModularReduction(benchmark::State& state) {
    CremonaMap g = build_gt(Rational(1));
    std::mt19937_64 rng(7);
    PrimeContext ctx = make_prime_context(rng);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_mod(g.coords[4], ctx));
}
BENCHMARK(BM_ModularReduction);

static void BM_GroupLawModularTrial(benchmark::State& state) {
    VerifyOptions opts;
    opts.trials = 1;
    opts.prime_count = 1;
    for (auto _ : state) {
        opts.seed = static_cast<std::uint64_t>(state.iterations() + 1);
        benchmark::DoNotOptimize(verify_group_law(opts));
    }
}
BENCHMARK(BM_GroupLawModularTrial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
