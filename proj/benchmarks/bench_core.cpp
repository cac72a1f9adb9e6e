#include <benchmark/benchmark.h>

#include "awdaha/analysis.hpp"
#include "awdaha/linalg.hpp"
#include "awdaha/realizations.hpp"

using namespace awdaha;

namespace {

FieldElement fe(long num, long den = 1) { return FieldElement(Rational(num, den)); }

// deterministic dense rational matrix with entries of mixed sign and size
SquareMatrix dense_rational(int n) {
    SquareMatrix m(n);
    long v = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            v = (v * 31 + 17) % 97;
            m.set(i, j, fe(v - 48, 1 + (i + j) % 5));
        }
    return m;
}

DahaSpecE espec(int d) {
    const FieldElement q = fe(2);
    return DahaSpecE{d, q, {q.pow(-(d + 1) / 2), fe(2), fe(3), fe(5)}};
}

void BM_CharPoly(benchmark::State& state) {
    const SquareMatrix m = dense_rational(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}

void BM_Inverse(benchmark::State& state) {
    const SquareMatrix m = dense_rational(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inverse(m));
}

void BM_RationalRoots(benchmark::State& state) {
    const SquareMatrix m = dense_rational(static_cast<int>(state.range(0)));
    const Polynomial p = char_poly(m);
    for (auto _ : state) benchmark::DoNotOptimize(rational_roots(p));
}

void BM_BuildAndPush(benchmark::State& state) {
    const DahaSpecE spec = espec(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(push_to_aw(build_e(spec)));
}

void BM_CompositionSeries(benchmark::State& state) {
    const AwRealization push = push_to_aw(twist(build_e(espec(static_cast<int>(state.range(0)))),
                                                TwistLabel{1}));
    for (auto _ : state) benchmark::DoNotOptimize(composition_series_aw(push));
}

void BM_Burnside(benchmark::State& state) {
    const DahaRealization m = build_e(espec(static_cast<int>(state.range(0))));
    const std::vector<SquareMatrix> gens{m.t[0], m.t[1], m.t[2], m.t[3]};
    for (auto _ : state) benchmark::DoNotOptimize(burnside_irreducible(gens));
}

BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Inverse)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_RationalRoots)->Arg(4)->Arg(6);
BENCHMARK(BM_BuildAndPush)->Arg(5)->Arg(9);
BENCHMARK(BM_CompositionSeries)->Arg(5)->Arg(9);
BENCHMARK(BM_Burnside)->Arg(5)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
