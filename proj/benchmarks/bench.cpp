#include "hvb/checks.hpp"
#include "hvb/cohomology.hpp"
#include "hvb/expr.hpp"
#include "hvb/families.hpp"

#include <benchmark/benchmark.h>

using namespace hvb;

namespace {

void BM_BracketWindow(benchmark::State& state)
{
    auto alg = AlgebraSpec::twisted_hv();
    auto gens = alg.generators(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& x : gens)
            for (const auto& y : gens)
                benchmark::DoNotOptimize(alg.bracket(x, y));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(gens.size() * gens.size()));
}
BENCHMARK(BM_BracketWindow)->Arg(4)->Arg(8);

void BM_CofR(benchmark::State& state)
{
    auto alg = AlgebraSpec::twisted_hv();
    TensorElement r(2);
    for (int k = 1; k <= state.range(0); ++k) {
        r.add_term(Monomial::of(BasisVector::L(k), BasisVector::I(-k)), k);
        r.add_term(Monomial::of(BasisVector::I(-k), BasisVector::L(k)), -k);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(c_of_r(alg, r));
}
BENCHMARK(BM_CofR)->Arg(2)->Arg(8)->Arg(16);

void BM_DerivationCheck(benchmark::State& state)
{
    auto alg = AlgebraSpec::twisted_hv();
    FamilyParams p;
    p.alpha = 1;
    p.beta = 2;
    p.z1 = BasisVector::CI();
    auto rho = rho_family(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_derivation(alg, rho, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DerivationCheck)->Arg(4)->Arg(8);

void BM_InnerSolve(benchmark::State& state)
{
    auto gens = rho_generators();
    for (auto _ : state)
        benchmark::DoNotOptimize(inner_solve(gens[0], static_cast<int>(state.range(0))));
}
BENCHMARK(BM_InnerSolve)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_H1(benchmark::State& state)
{
    auto alg = state.range(0) == 0 ? AlgebraSpec::witt() : AlgebraSpec::g1();
    for (auto _ : state)
        benchmark::DoNotOptimize(h1_degree_zero(alg, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_H1)->Args({0, 4})->Args({0, 5})->Args({1, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
