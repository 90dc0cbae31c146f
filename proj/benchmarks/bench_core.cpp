// Microbenchmarks for the hot paths: kernel evaluations, the nested
// replication optimizations, full bound rows, quadrature, and the Monte
// Carlo batch loop.

#include <benchmark/benchmark.h>

#include <numbers>

#include "mpae/bounds.hpp"
#include "mpae/kernels.hpp"
#include "mpae/montecarlo.hpp"
#include "mpae/replication.hpp"

namespace {

void bm_e0(benchmark::State& state) {
  double g = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpae::e0(2.0, g).value);
    g = g < 1e5 ? g * 1.0001 : 1.0;
  }
}
BENCHMARK(bm_e0);

void bm_gamma_alpha(benchmark::State& state) {
  double a = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpae::gamma_alpha(a).value);
    a = a < 1.5 ? a + 0.001 : 0.3;  // psi branch: grid + golden each call
  }
}
BENCHMARK(bm_gamma_alpha);

void bm_phi(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mpae::phi(0.7, 10.0).value);
}
BENCHMARK(bm_phi);

void bm_lambda_alpha(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mpae::lambda_alpha(2.0, 10.0));
}
BENCHMARK(bm_lambda_alpha);

void bm_achievability(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mpae::achievability_bound(2.0, 10.0));
}
BENCHMARK(bm_achievability);

void bm_bounds_row(benchmark::State& state) {
  for (auto _ : state) {
    double acc = 0.0;
    acc += mpae::dpt_bound(2.0, 10.0);
    acc += mpae::channel_coding_converse(2.0, 10.0);
    acc += mpae::spherical_cap_bound(2.0, 10.0);
    acc += mpae::spectrum_replication_bound(2.0, 10.0);
    acc += mpae::unlimited_bound(2.0, 10.0);
    acc += mpae::achievability_bound(2.0, 10.0);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_bounds_row);

void bm_cap_area(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mpae::cap_area_ratio(200, std::numbers::pi / 4));
}
BENCHMARK(bm_cap_area);

void bm_detector_batch(benchmark::State& state) {
  mpae::SimConfig cfg;
  cfg.n_dim = 64;
  cfg.num_levels = 8;
  cfg.snr = 10.0;
  cfg.trials = 4096;
  cfg.threads = 1;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(
        mpae::simulate_replication_detector(cfg, 0).empirical_error_prob);
  }
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}
BENCHMARK(bm_detector_batch);

}  // namespace

BENCHMARK_MAIN();
