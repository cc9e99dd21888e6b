#include "superw/bialgebra.hpp"
#include "superw/cohomology.hpp"

#include <benchmark/benchmark.h>

using namespace superw;

namespace {

Algebra case_a() { return Algebra(Group({Rational(1)}, Rational(0))); }

void BM_bracket_window(benchmark::State& state) {
    Algebra alg = case_a();
    DegreeWindow window(alg.group(), static_cast<int>(state.range(0)));
    auto symbols = window.symbols(alg);
    for (auto _ : state) {
        for (const auto& x : symbols) {
            for (const auto& y : symbols) {
                AlgElement ex = AlgElement::single(alg.group_ptr(), x, Rational(1));
                AlgElement ey = AlgElement::single(alg.group_ptr(), y, Rational(1));
                benchmark::DoNotOptimize(bracket(ex, ey));
            }
        }
    }
    state.SetItemsProcessed(state.iterations() * symbols.size() * symbols.size());
}
BENCHMARK(BM_bracket_window)->Arg(3)->Arg(6);

void BM_cybe(benchmark::State& state) {
    Algebra alg = case_a();
    TensorElement u;
    for (int k = 0; k < state.range(0); ++k) {
        u.add_term(alg.group_ptr(),
                   {alg.symbol(Family::L, Rational(k)), alg.symbol(Family::I, Rational(-k))},
                   Rational(k + 1));
    }
    RMatrix r = make_rmatrix(skew_project(u));
    for (auto _ : state) benchmark::DoNotOptimize(cybe(r));
}
BENCHMARK(BM_cybe)->Arg(2)->Arg(8);

void BM_h1_solve(benchmark::State& state) {
    Algebra alg = case_a();
    DegreeWindow window(alg.group(), static_cast<int>(state.range(0)));
    Degree t{Rational(1), Coset::Gamma};
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_h1_window(alg, t, Parity::Even, window));
}
BENCHMARK(BM_h1_solve)->Unit(benchmark::kMillisecond)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
