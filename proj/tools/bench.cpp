// Serial-reference vs OpenMP timings for the three data-parallel kernels:
// the agglomeration pair-cost sweep (via fit), the oracle's partition
// enumeration, and the dense grid minimizer. Both policies must produce
// identical results; the harness aborts if they ever disagree.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "tropfit/fitter.hpp"
#include "tropfit/oracle.hpp"

namespace {

using namespace tropfit;

SampleSet synthetic_samples(int m) {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<double> xs, ys;
    for (int i = 0; i < m; ++i) {
        const double x = -2.0 + 4.0 * i / (m - 1);
        xs.push_back(x);
        ys.push_back(std::abs(x) + 0.25 * x * x + noise(rng));
    }
    return make_samples(xs, ys, Semifield::max_plus);
}

TropPolynomial random_polynomial(int terms) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> mag(0.2, 4.0);
    std::vector<Monomial> ms;
    for (int j = 0; j < terms; ++j)
        ms.push_back(Monomial{coeff(rng), (j % 2 ? 1.0 : -1.0) * mag(rng)});
    return normalize(std::move(ms), Semifield::max_plus);
}

void require(bool ok, const char* what) {
    if (!ok) {
        std::fprintf(stderr, "serial/parallel mismatch: %s\n", what);
        std::abort();
    }
}

void bm_fit(benchmark::State& state, Exec exec) {
    const SampleSet samples = synthetic_samples(static_cast<int>(state.range(0)));
    FitConfig config;
    config.n_terms = 5;
    config.exec = exec;
    for (auto _ : state) {
        FitResult r = fit(samples, config);
        benchmark::DoNotOptimize(r.delta_star);
    }
    FitConfig serial_cfg = config;
    serial_cfg.exec = Exec::serial;
    FitConfig parallel_cfg = config;
    parallel_cfg.exec = Exec::parallel;
    require(fit(samples, serial_cfg).delta_star == fit(samples, parallel_cfg).delta_star,
            "fit delta");
}

void bm_oracle(benchmark::State& state, Exec exec) {
    const SampleSet samples = synthetic_samples(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        OracleResult r = exact_fit(samples, 3, exec);
        benchmark::DoNotOptimize(r.delta_exact);
    }
    require(exact_fit(samples, 3, Exec::serial).delta_exact ==
                exact_fit(samples, 3, Exec::parallel).delta_exact,
            "oracle delta");
}

void bm_grid(benchmark::State& state, Exec exec) {
    const TropPolynomial poly = random_polynomial(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto [arg, val] = grid_minimize(poly, -50.0, 50.0, 1e-4, exec);
        benchmark::DoNotOptimize(arg);
        benchmark::DoNotOptimize(val);
    }
    require(grid_minimize(poly, -50.0, 50.0, 1e-4, Exec::serial) ==
                grid_minimize(poly, -50.0, 50.0, 1e-4, Exec::parallel),
            "grid minimum");
}

} // namespace

BENCHMARK_CAPTURE(bm_fit, serial, Exec::serial)->Arg(60)->Arg(100)->Arg(140)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_fit, openmp, Exec::parallel)->Arg(60)->Arg(100)->Arg(140)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_oracle, serial, Exec::serial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_oracle, openmp, Exec::parallel)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_grid, serial, Exec::serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_grid, openmp, Exec::parallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
