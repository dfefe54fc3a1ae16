#include <benchmark/benchmark.h>

#include "owa/discrete_owa.hpp"
#include "owa/evaluate.hpp"
#include "owa/generators.hpp"
#include "owa/solvers.hpp"

namespace {

using namespace owa;

IntervalInstance dense_instance(int n) {
    return gen_type2(n, 12345, n / 2);
}

Solution half_selected(int n) {
    Solution x(static_cast<std::size_t>(n));
    for (int i = 0; i < n / 2; ++i) {
        x.set(static_cast<std::size_t>(i), true);
    }
    return x;
}

void BM_exact_cdf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto instance = dense_instance(n);
    const auto dist = build_distribution(instance, half_selected(n));
    const double y = 0.5 * (dist.lower() + dist.upper());
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_cdf(dist, y));
    }
}
BENCHMARK(BM_exact_cdf)->Arg(8)->Arg(16)->Arg(24)->Arg(36);

void BM_exact_var(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto instance = dense_instance(n);
    const auto dist = build_distribution(instance, half_selected(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_var(dist, 0.9));
    }
}
BENCHMARK(BM_exact_var)->Arg(8)->Arg(16)->Arg(24);

void BM_interval_owa_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto instance = dense_instance(n);
    const auto x = half_selected(n);
    const auto w = make_power_weight(5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(interval_owa_exact(instance, w, x));
    }
}
BENCHMARK(BM_interval_owa_exact)->Arg(8)->Arg(16)->Arg(24)->Arg(36);

void BM_interval_owa_sampled(benchmark::State& state) {
    const auto instance = dense_instance(12);
    const auto x = half_selected(12);
    const auto w = make_power_weight(5.0);
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(interval_owa_sampled(instance, w, x, K, 7));
    }
    state.SetItemsProcessed(state.iterations() * K);
}
BENCHMARK(BM_interval_owa_sampled)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_discrete_owa_value(benchmark::State& state) {
    const auto instance = dense_instance(12);
    const int K = static_cast<int>(state.range(0));
    const auto sample = sample_scenarios(instance, make_power_weight(5.0), K, 3);
    const auto x = half_selected(12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discrete_owa_value(sample, x));
    }
}
BENCHMARK(BM_discrete_owa_value)->Arg(10)->Arg(100)->Arg(1000);

void BM_solve_sampling_exact(benchmark::State& state) {
    const auto instance = dense_instance(static_cast<int>(state.range(0)));
    const auto w = make_power_weight(5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_sampling(instance, w, 100, 11));
    }
}
BENCHMARK(BM_solve_sampling_exact)->Arg(10)->Arg(12)->Arg(14);

void BM_solve_greedy(benchmark::State& state) {
    const auto instance = dense_instance(static_cast<int>(state.range(0)));
    const auto w = make_power_weight(5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_greedy_matroid(instance, w, 1000, 11));
    }
}
BENCHMARK(BM_solve_greedy)->Arg(12)->Arg(24)->Arg(40);

} // namespace

BENCHMARK_MAIN();
