// Serial reference versus OpenMP path for the parallel kernels.

#include <benchmark/benchmark.h>

#include "sfd/identities.hpp"
#include "sfd/spectral.hpp"
#include "sfd/system.hpp"

using namespace sfd;

namespace {

Execution mode(const benchmark::State& state) {
    return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_AssembleGenerator(benchmark::State& state) {
    const Mesh m = make_mesh(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(assemble_generator(Scheme::order_reduction, 1.0, m, mode(state)));
}
BENCHMARK(BM_AssembleGenerator)->ArgsProduct({{255, 1023}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ResolventSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SemiDiscreteSystem sys(Scheme::order_reduction, n, 1.0);
    SweepGrid grid = SweepGrid::defaults(n);
    grid.linear_steps = 41;
    grid.anchor_eigenvalues = false;
    (void)sys.weighted_generator();
    for (auto _ : state) benchmark::DoNotOptimize(resolvent_sweep(sys, grid, mode(state)));
}
BENCHMARK(BM_ResolventSweep)->ArgsProduct({{63, 255}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
    IdentitySuiteConfig config;
    config.ns = {static_cast<int>(state.range(0))};
    config.samples = 50;
    for (auto _ : state) benchmark::DoNotOptimize(run_identity_suite(config, mode(state)));
}
BENCHMARK(BM_IdentitySuite)->ArgsProduct({{64, 255}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
