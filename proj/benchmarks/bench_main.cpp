#include "eisprod/cusp.hpp"
#include "eisprod/serialize.hpp"
#include "eisprod/solver.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace eisprod;

namespace {

FourierExpansion fixture(const std::string& name)
{
    return expansion_from_json(read_json_file(std::string(EISPROD_FIXTURE_DIR) + "/" + name + ".json"));
}

EisLabel level_one(int l) { return {DirichletCharacter(), DirichletCharacter(), l, 1}; }

void BM_SeriesProductRational(benchmark::State& state)
{
    const long B = state.range(0);
    const FourierExpansion a = eis_expansion(level_one(4), B);
    const FourierExpansion b = eis_expansion(level_one(8), B);
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_SeriesProductRational)->Arg(100)->Arg(400)->Arg(1600);

void BM_SeriesProductCyclotomic(benchmark::State& state)
{
    const long B = state.range(0);
    const DirichletCharacter chi = enumerate_primitive(11, Parity::odd).at(0);
    const FourierExpansion a = eis_expansion({DirichletCharacter(), chi, 1, 1}, B);
    const FourierExpansion b = eis_expansion({DirichletCharacter(), chi.conj(), 1, 1}, B);
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_SeriesProductCyclotomic)->Arg(100)->Arg(400);

void BM_EisensteinExpansion(benchmark::State& state)
{
    const DirichletCharacter chi = enumerate_primitive(49, Parity::odd).at(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(eis_expansion({DirichletCharacter(), chi, 1, 1}, state.range(0)));
}
BENCHMARK(BM_EisensteinExpansion)->Arg(100)->Arg(1000);

void BM_CuspExpansion(benchmark::State& state)
{
    FormExpression f;
    f.add_product(Surd(CyclotomicNumber(1)), {level_one(4), level_one(8)});
    for (auto _ : state)
        benchmark::DoNotOptimize(expansion_at_cusp(f, 8, UnimodularMatrix(1, 0, 2, 1), state.range(0)));
}
BENCHMARK(BM_CuspExpansion)->Arg(10)->Arg(40);

void BM_Rank(benchmark::State& state)
{
    const u64 N = static_cast<u64>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_of_span(N, k, sturm_bound(N, k) + 5));
}
BENCHMARK(BM_Rank)->Args({11, 4})->Args({36, 8})->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state, const char* name, u64 N, int k)
{
    const FourierExpansion f = fixture(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_represent(f, N, k));
}
BENCHMARK_CAPTURE(BM_Solve, delta, "delta", 1, 12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, f32, "f32", 32, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, f36_k8, "f36_k8", 36, 8)->Unit(benchmark::kMillisecond);

} // namespace
