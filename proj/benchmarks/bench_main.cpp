#include <benchmark/benchmark.h>

#include <random>

#include "couette3d/fft.hpp"
#include "couette3d/multipliers.hpp"
#include "couette3d/nonlinear.hpp"
#include "couette3d/random_field.hpp"
#include "couette3d/spectral_ops.hpp"

using namespace couette;

static void BM_FFTRoundTrip(benchmark::State& state) {
    const int n = int(state.range(0));
    GridSpec g(n, n, n);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> dist;
    std::vector<Complex> phys(g.size()), spec, back;
    for (auto& v : phys) v = {dist(rng), dist(rng)};
    for (auto _ : state) {
        forward_transform(g, phys, spec);
        inverse_transform(g, spec, back);
        benchmark::DoNotOptimize(back.data());
    }
}
BENCHMARK(BM_FFTRoundTrip)->Arg(32)->Arg(64);

static void BM_LerayProject(benchmark::State& state) {
    const int n = int(state.range(0));
    GridSpec g(n, n, n);
    SpectralVectorField u(g, Frame::Shear, 2.5);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> dist;
    for (int i = 0; i < 3; ++i)
        for (auto& v : u.comp(i).c) v = {dist(rng), dist(rng)};
    for (auto _ : state) {
        leray_project(u);
        benchmark::DoNotOptimize(u.u1.c.data());
    }
}
BENCHMARK(BM_LerayProject)->Arg(32)->Arg(64);

static void BM_WEvaluation(benchmark::State& state) {
    const double eta = double(state.range(0));
    double t = 0.0;
    double acc = 0.0;
    for (auto _ : state) {
        t += 0.37;
        if (t > 2.0 * eta) t = 0.0;
        acc += w_full(t, eta, 4.0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_WEvaluation)->Arg(100)->Arg(10000);

static void BM_NonlinearRHS(benchmark::State& state) {
    const int n = int(state.range(0));
    GridSpec g(n, 2 * n, n);
    SimState s(g, 1e-3);
    s.uhat = random_initial_data(3, g, 0.1, Envelope::gevrey(0.5, 0.5));
    s.t = s.uhat.time = 1.5;
    for (auto _ : state) {
        auto tend = nonlinear_rhs(s);
        benchmark::DoNotOptimize(tend.u1.c.data());
    }
}
BENCHMARK(BM_NonlinearRHS)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
