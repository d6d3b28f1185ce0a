#include <benchmark/benchmark.h>

#include "dkdv/degree.hpp"
#include "dkdv/laurent.hpp"
#include "dkdv/sampling.hpp"
#include "dkdv/singularity.hpp"
#include "dkdv/zp.hpp"

namespace {

using dkdv::Laurent;
using dkdv::MapParams;
using dkdv::Rational;
using dkdv::Zp;

template <class K>
Laurent<K> dense_series(int width) {
    dkdv::Sampler sampler(7);
    auto s = Laurent<K>::constant(K::from_rational(sampler.generic()), width);
    for (int e = 1; e < width; ++e)
        s = s + Laurent<K>::monomial(K::from_rational(sampler.generic()), e, width);
    return s;
}

template <class K>
void bench_laurent_reciprocal(benchmark::State& state) {
    auto s = dense_series<K>(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(s.reciprocal());
}

void bench_classify_pattern(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    MapParams params(Rational(1), Rational(2), q);
    for (auto _ : state)
        benchmark::DoNotOptimize(dkdv::classify_pattern(params, q + 1, 0, 11));
}

void bench_epsilon_iterate_exact(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    MapParams params(Rational(1), Rational(1), q);
    dkdv::Sampler sampler(3);
    auto samples = dkdv::generic_vector(sampler, static_cast<std::size_t>(q) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            dkdv::epsilon_iterate(params, q + 1, samples, 2 * q + 2, 2, 0));
}

void bench_express_root(benchmark::State& state) {
    dkdv::ValueCountPattern pattern;
    pattern.block_zeros = {0};
    pattern.block_infs = {1, static_cast<long>(state.range(0))};
    pattern.period = state.range(0) + 1;
    auto poly = dkdv::express_char_poly(pattern);
    Rational tol(1, 1000000000);
    for (auto _ : state) benchmark::DoNotOptimize(dkdv::largest_real_root(poly, tol));
}

}  // namespace

BENCHMARK_TEMPLATE(bench_laurent_reciprocal, Rational)->Arg(12)->Arg(24);
BENCHMARK_TEMPLATE(bench_laurent_reciprocal, Zp)->Arg(12)->Arg(24);
BENCHMARK(bench_classify_pattern)->Arg(2)->Arg(4);
BENCHMARK(bench_epsilon_iterate_exact)->Arg(3)->Arg(5);
BENCHMARK(bench_express_root)->Arg(2)->Arg(5)->Arg(10);

BENCHMARK_MAIN();
