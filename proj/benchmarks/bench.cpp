#include <benchmark/benchmark.h>

#include "qfi/qfi.hpp"

using namespace qfi;

static void bm_is_prime(benchmark::State & state)
{
    Int m = Int(1) << 61;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_prime(m + 1));
        benchmark::DoNotOptimize(is_prime(9223372036854775783LL));
    }
}
BENCHMARK(bm_is_prime);

static void bm_legendre(benchmark::State & state)
{
    Int a = 13;
    for (auto _ : state) {
        benchmark::DoNotOptimize(legendre(a, 998244353));
        a = a * 7 % 998244353;
    }
}
BENCHMARK(bm_legendre);

static void bm_sqrt_mod(benchmark::State & state)
{
    // 998244353 - 1 = 2^23 * 119, the slow Tonelli-Shanks case
    Int a = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqrt_mod(a, 998244353));
        a = a * 25 % 998244353;
    }
}
BENCHMARK(bm_sqrt_mod);

static void bm_pell(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(pell_fundamental(state.range(0)));
}
BENCHMARK(bm_pell)->Arg(61)->Arg(661)->Arg(9901);

static void bm_is_principal_imaginary(benchmark::State & state)
{
    SplitPrimeIdeal const P(QuadraticField(-5), 47, 18);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_principal(P).verdict);
}
BENCHMARK(bm_is_principal_imaginary);

static void bm_is_principal_real(benchmark::State & state)
{
    SplitPrimeIdeal const P(QuadraticField(5), 101, 45);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_principal(P).verdict);
}
BENCHMARK(bm_is_principal_real);

static void bm_rabinowitsch(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rabinowitsch(-163).verdict);
}
BENCHMARK(bm_rabinowitsch);

static void bm_scan(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_h1(1, 20000, static_cast<unsigned>(state.range(0))).size());
}
BENCHMARK(bm_scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void bm_lemma_search(benchmark::State & state)
{
    for (auto _ : state)
        for (Int p = 620; p <= 50000; ++p)
            if (is_prime(p) && is_prime(4 * p - 1))
                benchmark::DoNotOptimize(lemma613_find_n(p));
}
BENCHMARK(bm_lemma_search)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
