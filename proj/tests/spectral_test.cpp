#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "blowup/ode/integrator.hpp"
#include "blowup/odi/certificate.hpp"
#include "blowup/spectral/problem.hpp"
#include "blowup/spectral/quadrature.hpp"
#include "blowup/spectral/simulate.hpp"

using namespace blowup;
using spectral::ModalState;
using spectral::ProblemKind;
using spectral::SpectralConfig;
using spectral::WaveProblem;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralConfig base_config(ProblemKind kind, int n_modes, double horizon) {
  SpectralConfig cfg;
  cfg.problem = kind;
  cfg.n_modes = n_modes;
  cfg.n_quad = 4 * n_modes;
  cfg.horizon = horizon;
  return cfg;
}

ode::IntegratorOptions wave_opts(double horizon) {
  ode::IntegratorOptions opts;
  opts.horizon = horizon;
  opts.rel_tol = 1e-9;
  opts.abs_tol = 1e-12;
  return opts;
}

}  // namespace

TEST_CASE("composite quadrature integrates the eigenbasis") {
  const auto table = spectral::composite_gauss_legendre(128);
  CHECK(table.size() >= 128);
  CHECK(table.integrate([](double) { return 1.0; }) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(table.integrate([](double x) { return std::sin(x); }) ==
        doctest::Approx(2.0).epsilon(1e-13));
  // Orthogonality of the modes the table is meant to resolve.
  for (int k = 1; k <= 32; k += 7) {
    for (int j = 1; j <= 32; j += 7) {
      const double v = table.integrate(
          [k, j](double x) { return std::sin(k * x) * std::sin(j * x); });
      const double expected = k == j ? kPi / 2.0 : 0.0;
      CHECK(std::abs(v - expected) < 1e-10);
    }
  }
}

TEST_CASE("config validation") {
  SpectralConfig cfg = base_config(ProblemKind::SingleWave, 8, 1.0);
  CHECK_NOTHROW(cfg.validate());
  cfg.n_quad = 8;  // below the 4x anti-aliasing bound
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config(ProblemKind::SingleWave, 8, 1.0);
  cfg.q = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("eigen projection") {
  const WaveProblem prob(base_config(ProblemKind::SingleWave, 8, 1.0), {1.0}, {});
  ModalState s = prob.unpack(0.0, prob.initial_state());
  const auto p = spectral::project_eigen(s);
  CHECK(p.v == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK(p.v_prime == 0.0);

  // Orthogonality: a pure second mode projects to zero.
  const WaveProblem prob2(base_config(ProblemKind::SingleWave, 8, 1.0), {0.0, 1.0}, {});
  const auto p2 = spectral::project_eigen(prob2.unpack(0.0, prob2.initial_state()));
  CHECK(p2.v == 0.0);

  const WaveProblem zero(base_config(ProblemKind::SingleWave, 8, 1.0), {}, {});
  CHECK(spectral::project_eigen(zero.unpack(0.0, zero.initial_state())).v == 0.0);
}

TEST_CASE("modal and quadrature projections agree") {
  for (int n : {8, 16, 32, 64}) {
    auto cfg = base_config(ProblemKind::SingleWave, n, 1.0);
    std::vector<double> u0(n), u1(n);
    for (int k = 0; k < n; ++k) {
      u0[k] = std::cos(0.7 * (k + 1)) / (k + 1);
      u1[k] = std::sin(0.3 * (k + 1)) / (k + 1);
    }
    const WaveProblem prob(cfg, u0, u1);
    const ModalState s = prob.unpack(0.0, prob.initial_state());
    const auto modal = spectral::project_eigen(s);
    const auto quad = prob.project_u_quadrature(s);
    CHECK(std::abs(modal.v - quad.v) < 1e-10);
    CHECK(std::abs(modal.v_prime - quad.v_prime) < 1e-10);
  }
}

TEST_CASE("sampled initial data round-trips through projection") {
  const WaveProblem prob(base_config(ProblemKind::SingleWave, 8, 1.0), {}, {});
  const auto modes = prob.project_function(
      [](double x) { return 2.0 * std::sin(x) + 0.25 * std::sin(3.0 * x); });
  CHECK(modes[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(modes[1]) < 1e-12);
  CHECK(modes[2] == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("zero data is a fixed point") {
  const WaveProblem prob(base_config(ProblemKind::SingleWave, 8, 0.5), {}, {});
  const auto wt = spectral::simulate_wave(prob, wave_opts(0.5));
  CHECK(wt.termination.kind == ode::TerminationKind::Survived);
  for (double v : wt.v) CHECK(v == 0.0);
  for (double vp : wt.v_prime) CHECK(vp == 0.0);
}

TEST_CASE("linear wave reproduces the first mode over one period") {
  auto cfg = base_config(ProblemKind::SingleWave, 1, 2.0 * kPi);
  cfg.C = 0.0;  // degenerate linear limit
  cfg.n_quad = 8;
  const WaveProblem prob(cfg, {1.0}, {});
  const auto wt = spectral::simulate_wave(prob, wave_opts(2.0 * kPi));
  REQUIRE(wt.termination.kind == ode::TerminationKind::Survived);
  const auto& last = wt.snapshots.back();
  CHECK(std::abs(last.u_pos[0] - 1.0) < 1e-6);
  CHECK(std::abs(last.u_vel[0]) < 1e-6);
  // c_1(t) = cos t at interior snapshots as well.
  for (size_t i = 0; i < wt.times.size(); i += 16)
    CHECK(std::abs(wt.snapshots[i].u_pos[0] - std::cos(wt.times[i])) < 1e-7);

  // With the truncation exact at N = 1 the only error source is the
  // integrator; a tight tolerance drives the period error below 1e-10.
  auto tight = wave_opts(2.0 * kPi);
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-15;
  const auto wt_tight = spectral::simulate_wave(prob, tight);
  REQUIRE(wt_tight.termination.kind == ode::TerminationKind::Survived);
  CHECK(std::abs(wt_tight.snapshots.back().u_pos[0] - 1.0) < 1e-10);

  // Adding modes must not perturb mode 1 beyond integrator tolerance.
  auto cfg8 = base_config(ProblemKind::SingleWave, 8, 2.0 * kPi);
  cfg8.C = 0.0;
  const WaveProblem prob8(cfg8, {1.0, 0.0, 0.2}, {});
  const auto wt8 = spectral::simulate_wave(prob8, wave_opts(2.0 * kPi));
  REQUIRE(wt8.termination.kind == ode::TerminationKind::Survived);
  CHECK(std::abs(wt8.snapshots.back().u_pos[0] - 1.0) < 1e-9);
  CHECK(std::abs(wt8.snapshots.back().u_pos[2] - 0.2 * std::cos(3.0 * 2.0 * kPi)) < 1e-6);
}

TEST_CASE("nonlinear wave run: certificate, convexity residuals, indicator") {
  auto cfg = base_config(ProblemKind::SingleWave, 16, 3.0);
  cfg.C = 2.0;
  cfg.q = 1.5;
  const WaveProblem prob(cfg, {}, {2.0});
  const ModalState s0 = prob.unpack(0.0, prob.initial_state());
  const auto proj0 = spectral::project_eigen(s0);
  CHECK(proj0.v == 0.0);
  CHECK(proj0.v_prime == doctest::Approx(kPi / 2.0).epsilon(1e-14));

  const auto res = odi::certify_wave(1.0, cfg.C, cfg.q, proj0.v, proj0.v_prime,
                                     spectral::kPhiSup);
  REQUIRE(res.certified());
  const auto& cert = res.cert();
  CHECK(cert.t_star == doctest::Approx(1.5957691216057308).epsilon(1e-12));

  auto opts = wave_opts(3.0);
  const auto wt = spectral::simulate_wave(prob, opts);
  REQUIRE(wt.indicator_time().has_value());
  CHECK(*wt.indicator_time() <= cert.t_star);
  for (double r : wt.jensen) CHECK(r >= -1e-8);

  const auto rep = spectral::verify_theorem(prob, wt, cert, 0.05);
  CHECK(rep.pass);
  CHECK(rep.checked > 10);
  CHECK(rep.min_jensen >= -1e-8);

  // A mismatched certificate (different C) must be rejected up front.
  const auto wrong = odi::certify_wave(1.0, 3.0, cfg.q, proj0.v, proj0.v_prime,
                                       spectral::kPhiSup);
  REQUIRE(wrong.certified());
  CHECK_THROWS_AS(spectral::verify_theorem(prob, wt, wrong.cert(), 0.05),
                  std::invalid_argument);
}

TEST_CASE("hyperbolic-elliptic variant ties the unknowns mode-wise") {
  auto cfg = base_config(ProblemKind::HyperbolicElliptic, 8, 1.0);
  cfg.C = 1.0;
  cfg.q = 1.5;
  const WaveProblem prob(cfg, {0.3, 0.1}, {3.8, 0.2});
  const ModalState s = prob.unpack(0.0, prob.initial_state());
  for (int k = 0; k < 8; ++k) {
    const double lam = (k + 1.0) * (k + 1.0);
    CHECK(s.v_pos[k] == doctest::Approx(s.u_pos[k] / lam).epsilon(1e-15));
    CHECK(s.v_vel[k] == doctest::Approx(s.u_vel[k] / lam).epsilon(1e-15));
  }

  // U1 = (pi/4) 3.8 ~ 2.98 clears the velocity cutoff for a = b = 1.
  const auto proj = spectral::project_eigen(s);
  const auto res = odi::reduce_elliptic(1.0, cfg.q, proj.v, proj.v_prime,
                                        spectral::kPhiSup);
  REQUIRE(res.certified());

  const auto wt = spectral::simulate_wave(prob, wave_opts(3.0));
  const auto rep = spectral::verify_theorem(prob, wt, res.cert(), 0.05);
  CHECK(rep.pass);
  CHECK(rep.identity_error <= 1e-9);
  for (size_t i = 0; i < wt.times.size(); ++i)
    CHECK(std::abs(spectral::kLambda1 * wt.v2_prime[i] - wt.v_prime[i]) <=
          1e-9 * std::max(1.0, std::abs(wt.v_prime[i])));
}

TEST_CASE("hyperbolic-parabolic variant") {
  auto cfg = base_config(ProblemKind::HyperbolicParabolic, 8, 2.0);
  cfg.q = 1.5;
  cfg.beta = -1.0;
  cfg.p = 1.0;
  cfg.m = 1.0;

  SUBCASE("m != 1 is rejected") {
    auto bad = cfg;
    bad.m = 2.0;
    CHECK_THROWS_AS(WaveProblem(bad, {}, {3.8}, {0.5}), std::invalid_argument);
  }
  SUBCASE("sign-changing initial gap is rejected") {
    CHECK_THROWS_AS(WaveProblem(cfg, {}, {3.8}, {0.0, 1.0}), std::invalid_argument);
  }
  SUBCASE("projected gap decays while nonnegative (beta <= 0)") {
    const WaveProblem prob(cfg, {}, {3.8}, {0.5});
    const auto wt = spectral::simulate_wave(prob, wave_opts(2.0));
    // gap(t) = U - V = projection of w.
    double prev = kPi / 4.0 * 0.5;
    for (size_t i = 0; i < wt.times.size(); ++i) {
      const double gap = wt.v[i] - wt.v2[i];
      if (prev >= 0.0) CHECK(gap <= prev * (1.0 + 1e-9) + 1e-12);
      prev = gap;
    }

    const auto proj = spectral::project_eigen(wt.snapshots.front());
    const auto res =
        odi::reduce_parabolic(1.0, cfg.q, cfg.beta, cfg.m, cfg.p, proj.v,
                              proj.v - kPi / 4.0 * 0.5, proj.v_prime, spectral::kPhiSup);
    REQUIRE(res.certified());
    const auto rep = spectral::verify_theorem(prob, wt, res.cert(), 0.05);
    CHECK(rep.pass);
  }
}

TEST_CASE("coupled wave system validates a system certificate") {
  auto cfg = base_config(ProblemKind::WaveSystem, 8, 3.0);
  cfg.p = 1.5;
  cfg.q = 2.0;
  // Mode-1 data whose projections are the reference quadruple (4,4,4,4).
  const double c = 16.0 / kPi;
  const WaveProblem prob(cfg, {c}, {c}, {c}, {c});
  const ModalState s0 = prob.unpack(0.0, prob.initial_state());
  const auto pu = spectral::project_eigen(s0);
  const auto pv = prob.project_v(s0);
  CHECK(pu.v == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(pv.v_prime == doctest::Approx(4.0).epsilon(1e-14));

  const auto res = odi::certify_system(odi::SystemParams(1.0, cfg.p, cfg.q), pu.v, pv.v,
                                       pu.v_prime, pv.v_prime, true, spectral::kPhiSup);
  REQUIRE(res.certified());
  CHECK(res.cert().t_star == doctest::Approx(2.5).epsilon(1e-12));

  const auto wt = spectral::simulate_wave(prob, wave_opts(3.0));
  REQUIRE(wt.indicator_time().has_value());
  CHECK(*wt.indicator_time() <= 2.5);
  const auto rep = spectral::verify_theorem(prob, wt, res.cert(), 0.05);
  CHECK(rep.pass);
  for (double r : wt.jensen) CHECK(r >= -1e-8);
}

TEST_CASE("wave trajectory CSV and modal dump") {
  auto cfg = base_config(ProblemKind::SingleWave, 4, 0.2);
  cfg.C = 1.0;
  const WaveProblem prob(cfg, {0.5}, {0.5});
  const auto wt = spectral::simulate_wave(prob, wave_opts(0.2));
  std::ostringstream csv;
  spectral::write_wave_csv(csv, wt);
  CHECK(csv.str().rfind("t,v,v_prime,ut_l1,jensen,tail\n", 0) == 0);
  std::ostringstream js;
  spectral::write_modal_json(js, wt);
  CHECK(js.str().front() == '[');
  CHECK(js.str().find("u_pos") != std::string::npos);
}
