#include <benchmark/benchmark.h>

#include <random>

#include "gbc/flow.hpp"
#include "gbc/integrals.hpp"
#include "gbc/rotmass.hpp"
#include "gbc/symfunc.hpp"
#include "gbc/tensor_kernel.hpp"

using namespace gbc;

static void BM_ElementarySymmetric(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::normal_distribution<double> N;
    std::vector<double> x(static_cast<std::size_t>(state.range(0)));
    for (auto& v : x) v = N(rng);
    const Spectrum s(x);
    for (auto _ : state) benchmark::DoNotOptimize(elementary_symmetric_all(s));
}
BENCHMARK(BM_ElementarySymmetric)->Arg(4)->Arg(8);

static void BM_GaussBonnetLk(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    const RiemannTensor R = modified_riemann(assemble_two_eigenvalue(-0.3, 0.7, n));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_bonnet_Lk(R, k));
}
BENCHMARK(BM_GaussBonnetLk)->Args({5, 2})->Args({7, 3});

static void BM_SurfaceIntegrator(benchmark::State& state)
{
    const AxisymSurface s = perturbed_sphere(6, 1.0, 0.05, 2);
    const QuadratureRule rule(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(SurfaceIntegrator(s, rule).area());
}
BENCHMARK(BM_SurfaceIntegrator)->Arg(64)->Arg(128);

static void BM_FlowStep(benchmark::State& state)
{
    const FlowState st = FlowState::from_surface(offset_sphere(5, 1.0, 0.3), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(step(st, 1e-4));
}
BENCHMARK(BM_FlowStep)->Arg(32)->Arg(64);

static void BM_MassFlux(benchmark::State& state)
{
    const RotSymMetric g = RotSymMetric::ads_schwarzschild(7, 3, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(mass_flux(g, 3, 40.0));
}
BENCHMARK(BM_MassFlux);

BENCHMARK_MAIN();
