// Microbenchmarks for the hot paths: the Hermite null-vector solve, the
// simultaneous root finder, and one branch-tracked field evaluation.

#include <benchmark/benchmark.h>

#include <cmath>

#include "ratexp/gfunction.hpp"
#include "ratexp/interpolant.hpp"
#include "ratexp/rootfinding.hpp"
#include "ratexp/scheme.hpp"

using namespace ratexp;

namespace {

void BM_SolveConfluent(benchmark::State& state) {
    const long n = state.range(0);
    const Scheme s = make_point_mass(n, BigComplex(0L, 0L, 256));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_interpolant(s));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SolveConfluent)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void BM_SolveCircleScheme(benchmark::State& state) {
    const long n = state.range(0);
    const Scheme s = make_circle(n, BigFloat(2.0, 256), 256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_interpolant(s));
    }
}
BENCHMARK(BM_SolveCircleScheme)->Arg(4)->Arg(8)->Arg(16);

void BM_PolyRoots(benchmark::State& state) {
    const long deg = state.range(0);
    const mpfr_prec_t p = 256;
    // fixed synthetic polynomial: roots on two rings, off the axes
    std::vector<BigComplex> roots;
    for (long k = 0; k < deg; ++k) {
        const double th = 2.0 * 3.14159265358979323846 * k / deg + 0.37;
        const double r = k % 2 ? 1.5 : 0.6;
        roots.emplace_back(BigFloat(r * std::cos(th), p), BigFloat(r * std::sin(th), p));
    }
    const Polynomial poly = Polynomial::from_roots(roots, BigComplex(1L, 0L, p));
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_roots(poly));
    }
    state.SetComplexityN(deg);
}
BENCHMARK(BM_PolyRoots)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void BM_FieldEvaluation(benchmark::State& state) {
    const LimitField f(make_point_mass(8, BigComplex(0L, 0L, 256)));
    const BigComplex z(BigFloat(-0.9, 256), BigFloat(0.4, 256));  // left region
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.g(z));
    }
}
BENCHMARK(BM_FieldEvaluation);

void BM_EtaRealRoot(benchmark::State& state) {
    const auto prec = static_cast<mpfr_prec_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eta_real_root(prec));
    }
}
BENCHMARK(BM_EtaRealRoot)->Arg(128)->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
