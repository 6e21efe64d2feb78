// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
// Thread count follows DELAB_THREADS.

#include "delab/cylinder.hpp"
#include "delab/probe.hpp"
#include "delab/torus.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

delab::Exec mode(const benchmark::State& s) { return s.range(0) ? delab::Exec::parallel : delab::Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_KernelResiduals(benchmark::State& s) {
    const delab::DelaunayProfile P(0.2);
    for (auto _ : s) benchmark::DoNotOptimize(kernel_residuals(P, 201, 64, mode(s)));
    label(s);
}

void BM_MeanCurvatureExpansion(benchmark::State& s) {
    const delab::DelaunayProfile P(-0.1);
    const std::vector<double> eps = {1e-2, 5e-3, 2.5e-3};
    for (auto _ : s) benchmark::DoNotOptimize(mean_curvature_expansion(P, eps, {201, 64, mode(s)}));
    label(s);
}

void BM_StripIntegral(benchmark::State& s) {
    const auto F = [](double t, double th) { return std::exp(-t * t) * (1 + std::cos(th)) / std::cosh(t); };
    for (auto _ : s) benchmark::DoNotOptimize(delab::strip_integral(F, mode(s)));
    label(s);
}

void BM_WeightedNorms(benchmark::State& s) {
    const delab::DelaunayProfile P(-0.1);
    const auto phi = delab::NormalPerturbation::separable(
        [&P](double t) { return std::array<double, 3>{P.x(t), P.xp(t), P.xpp(t)}; }, 1, 0.0);
    for (auto _ : s) benchmark::DoNotOptimize(weighted_norms(phi, P, 1, 0.5, 400, 64, mode(s)));
    label(s);
}

}  // namespace

BENCHMARK(BM_KernelResiduals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanCurvatureExpansion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StripIntegral)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedNorms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
