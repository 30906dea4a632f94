#include <benchmark/benchmark.h>

#include <vector>

#include "wrlab/dnwr.hpp"
#include "wrlab/experiment.hpp"
#include "wrlab/nnwr.hpp"
#include "wrlab/theory.hpp"

using namespace wrlab;

namespace {

void BM_HeatSolve(benchmark::State& state)
{
    ExperimentConfig c;
    c.dx = 5.0 / static_cast<double>(state.range(0));
    const HeatProblem1D p = build_problem(c);
    const TimeGrid time = c.time_grid();
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_space_time(p, time));
    state.SetItemsProcessed(state.iterations() * state.range(0) * time.n_steps());
}
BENCHMARK(BM_HeatSolve)->Arg(250)->Arg(1000)->Arg(4000);

void BM_DnwrIteration(benchmark::State& state)
{
    ExperimentConfig c;
    const HeatProblem1D p = build_problem(c);
    const TimeGrid time = c.time_grid();
    const DnwrSubproblems sub = split_for_dnwr(p, time, 3.0);
    DnwrState s{initial_guess(c), 0, {}};
    for (auto _ : state)
        benchmark::DoNotOptimize(dnwr_iterate(s, sub, time, 0.5));
}
BENCHMARK(BM_DnwrIteration);

void BM_NnwrIteration(benchmark::State& state)
{
    ExperimentConfig c = figure_configs("nnwr-N").front();
    const int n = static_cast<int>(state.range(0));
    c.interfaces.clear();
    for (int j = 1; j < n; ++j)
        c.interfaces.push_back(6.0 * j / n);
    const HeatProblem1D p = build_problem(c);
    const TimeGrid time = c.time_grid();
    const Partition part = c.partition();
    const InterfaceState s{std::vector<TraceSeries>(static_cast<std::size_t>(n - 1), initial_guess(c)), 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(nnwr_iterate(s, p, part, time, 0.25));
}
BENCHMARK(BM_NnwrIteration)->DenseRange(2, 6, 2);

void BM_KernelSeries(benchmark::State& state)
{
    const KernelSpec ks{static_cast<int>(state.range(0)), 0.5, 1e-14};
    double t = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_cosech_pow(ks, t));
        t = t < 50.0 ? t * 1.1 : 0.01;
    }
}
BENCHMARK(BM_KernelSeries)->Arg(1)->Arg(3)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
