#include <benchmark/benchmark.h>

#include "blowup/ode/diagnostics.hpp"
#include "blowup/ode/integrator.hpp"
#include "blowup/odi/certificate.hpp"
#include "blowup/spectral/problem.hpp"

using namespace blowup;

static void BM_CertifyScalar(benchmark::State& state) {
  const odi::OdiParams params(1.0, 2.0, 1.5);
  for (auto _ : state) {
    auto res = odi::certify_scalar(params, 0.0, 1.0);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_CertifyScalar);

static void BM_IntegrateScalarExtremal(benchmark::State& state) {
  const odi::OdiParams params(1.0, 2.0, 1.5);
  const auto field = ode::extremal_scalar_field(params);
  ode::IntegratorOptions opts;
  opts.blowup_threshold = 1e6;
  opts.horizon = 4.0;
  for (auto _ : state) {
    auto traj = ode::integrate_ivp(field, {0.0, 1.0}, opts);
    benchmark::DoNotOptimize(traj.termination.time);
    state.counters["steps"] = static_cast<double>(traj.times.size());
  }
}
BENCHMARK(BM_IntegrateScalarExtremal);

static void BM_ModalRhs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  spectral::SpectralConfig cfg;
  cfg.n_modes = n;
  cfg.n_quad = 4 * n;
  cfg.C = 2.0;
  cfg.q = 1.5;
  cfg.horizon = 1.0;
  const spectral::WaveProblem prob(cfg, {}, {2.0});
  const auto field = prob.field();
  ode::State y = prob.initial_state(), dydt(y.size());
  for (auto _ : state) {
    field.eval(0.0, y, dydt);
    benchmark::DoNotOptimize(dydt.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ModalRhs)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_BoundaryInwardness(benchmark::State& state) {
  const odi::OdiParams params(1.0, 2.0, 1.5);
  const odi::SubQuadraticRegion region{odi::sub_quadratic_constants(params)};
  for (auto _ : state) {
    auto rep = ode::boundary_inwardness(params, region, 1000, region.constants.x1, 5.0);
    benchmark::DoNotOptimize(rep.min_inward);
  }
}
BENCHMARK(BM_BoundaryInwardness);

BENCHMARK_MAIN();
