#include <benchmark/benchmark.h>

#include "lw3/gallery.hpp"
#include "lw3/geometry.hpp"
#include "lw3/liouville.hpp"

using namespace lw3;

static void BM_ScalarMulSplit(benchmark::State& state) {
    EpsScalar z = scalar(1.1, 0.3, Eps::timelike);
    const EpsScalar w = scalar(0.99, 0.01, Eps::timelike);
    for (auto _ : state) {
        z = z * w;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_ScalarMulSplit);

static void BM_ParacomplexExp(benchmark::State& state) {
    const EpsScalar z = scalar(0.4, -0.7, Eps::timelike);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp(z));
    }
}
BENCHMARK(BM_ParacomplexExp);

static void BM_WirtingerResidual(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const GridSpec spec = GridSpec::from_rect({-0.5, 0.5, -0.5, 0.5}, n, n);
    const GridField f =
        sample_field(spec, Eps::timelike, [](const EpsScalar& z) { return exp(z); });
    for (auto _ : state) {
        benchmark::DoNotOptimize(wirtinger_residual(f));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WirtingerResidual)->Range(64, 512)->Complexity();

static void BM_IntegrateImmersion(benchmark::State& state) {
    const GalleryEntry e = get_example("elliptic_catenoid");
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const GridSpec spec = GridSpec::from_rect(e.verify_window, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_immersion(e.chart, spec, n / 2, n / 2));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntegrateImmersion)->Range(64, 256)->Complexity();

static void BM_CurvaturePipeline(benchmark::State& state) {
    const GalleryEntry e = get_example("timelike_bonnet");
    const GridSpec spec = GridSpec::from_rect(e.verify_window, 101, 101);
    const SurfaceGrid s = integrate_immersion(e.chart, spec, 50, 50);
    for (auto _ : state) {
        ShapeReport rep = fundamental_forms(s, &e.chart);
        curvatures(rep, true);
        benchmark::DoNotOptimize(rep.max_abs_H);
    }
}
BENCHMARK(BM_CurvaturePipeline);

static void BM_ToRotation(benchmark::State& state) {
    const MobiusParams t =
        from_axis_angle({{0.6, 0.8, std::sqrt(2.0)}, 0.9, -1}, Eps::spacelike);
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_rotation(t));
    }
}
BENCHMARK(BM_ToRotation);

static void BM_LambdaFromG(benchmark::State& state) {
    const GalleryEntry e = get_example("minkowski_bonnet");
    const GridSpec spec = GridSpec::from_rect(e.verify_window, 201, 201);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambda_from_g(e.chart.g, e.chart.g_prime, e.eps, spec));
    }
}
BENCHMARK(BM_LambdaFromG);

BENCHMARK_MAIN();
