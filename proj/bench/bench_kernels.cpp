// Serial reference against OpenMP kernels on the oracle's window sizes.

#include "subideal/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace subideal;
namespace k = subideal::kernels;

namespace {

const SeqExpr& lhs()
{
    static const SeqExpr e = SeqExpr::max(SeqExpr::power_log(1, 1), SeqExpr::geometric(Rational(2, 3)));
    return e;
}

const SeqExpr& rhs()
{
    static const SeqExpr e = ampliate(SeqExpr::sum(SeqExpr::power_log(1), SeqExpr::power_log(2)), 3);
    return e;
}

template <auto Kernel>
void log_values(benchmark::State& state)
{
    const Index n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(lhs(), 1, n));
    state.SetItemsProcessed(state.iterations() * n);
}

template <auto Kernel>
void extrema(benchmark::State& state)
{
    const Index n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(lhs(), rhs(), 1, n));
    state.SetItemsProcessed(state.iterations() * n);
}

template <auto Kernel>
void deviation(benchmark::State& state)
{
    const auto values = k::parallel::log_values(lhs(), 1, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(values, -3.0L));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(log_values<k::serial::log_values>)->Name("log_values/serial")->RangeMultiplier(10)->Range(10'000, 1'000'000);
BENCHMARK(log_values<k::parallel::log_values>)->Name("log_values/parallel")->RangeMultiplier(10)->Range(10'000, 1'000'000);
BENCHMARK(extrema<k::serial::log_ratio_extrema>)->Name("extrema/serial")->RangeMultiplier(10)->Range(10'000, 1'000'000);
BENCHMARK(extrema<k::parallel::log_ratio_extrema>)->Name("extrema/parallel")->RangeMultiplier(10)->Range(10'000, 1'000'000);
BENCHMARK(deviation<k::serial::max_abs_deviation>)->Name("deviation/serial")->RangeMultiplier(10)->Range(10'000, 1'000'000);
BENCHMARK(deviation<k::parallel::max_abs_deviation>)->Name("deviation/parallel")->RangeMultiplier(10)->Range(10'000, 1'000'000);

BENCHMARK_MAIN();
