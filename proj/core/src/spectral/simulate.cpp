#include "blowup/spectral/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace blowup::spectral {

std::optional<double> WaveTrajectory::indicator_time() const {
  std::optional<double> t;
  if (termination.kind == ode::TerminationKind::BlownUp) t = termination.time;
  if (resolution_loss) {
    if (!t || resolution_loss_time < *t) t = resolution_loss_time;
  }
  return t;
}

WaveTrajectory simulate_wave(const WaveProblem& problem, const ode::IntegratorOptions& opts) {
  const ode::Trajectory traj = ode::integrate_ivp(problem.field(), problem.initial_state(), opts);

  WaveTrajectory wt;
  wt.config = problem.config();
  wt.termination = traj.termination;
  const size_t n = traj.times.size();
  wt.times.reserve(n);
  wt.snapshots.reserve(n);

  const bool coupled = problem.config().problem != ProblemKind::SingleWave;
  for (size_t i = 0; i < n; ++i) {
    ModalState s = problem.unpack(traj.times[i], traj.states[i]);
    const Projection pu = project_eigen(s);
    wt.times.push_back(traj.times[i]);
    wt.v.push_back(pu.v);
    wt.v_prime.push_back(pu.v_prime);
    wt.ut_l1.push_back(problem.ut_l1(s));
    if (problem.config().problem == ProblemKind::WaveSystem)
      wt.sum_l1.push_back(problem.sum_l1(s));
    if (coupled) {
      const Projection pv = problem.project_v(s);
      wt.v2.push_back(pv.v);
      wt.v2_prime.push_back(pv.v_prime);
    }
    wt.jensen.push_back(problem.jensen_residual(s));
    const double tr = problem.tail_ratio(s);
    wt.tail.push_back(tr);
    if (!wt.resolution_loss && tr > kTailTrustLimit && i > 0) {
      wt.resolution_loss = true;
      wt.resolution_loss_time = traj.times[i];
      wt.last_trusted_time = traj.times[i - 1];
    }
    wt.snapshots.push_back(std::move(s));
  }
  if (!wt.resolution_loss && !wt.times.empty()) wt.last_trusted_time = wt.times.back();
  return wt;
}

void write_wave_csv(std::ostream& os, const WaveTrajectory& wt) {
  const bool coupled = wt.has_second_unknown();
  const bool system = !wt.sum_l1.empty();
  os << "t,v,v_prime,ut_l1,jensen,tail";
  if (coupled) os << ",v2,v2_prime";
  if (system) os << ",sum_l1";
  os << "\n";
  char buf[32];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf;
  };
  for (size_t i = 0; i < wt.times.size(); ++i) {
    put(wt.times[i]);
    os << ',';
    put(wt.v[i]);
    os << ',';
    put(wt.v_prime[i]);
    os << ',';
    put(wt.ut_l1[i]);
    os << ',';
    put(wt.jensen[i]);
    os << ',';
    put(wt.tail[i]);
    if (coupled) {
      os << ',';
      put(wt.v2[i]);
      os << ',';
      put(wt.v2_prime[i]);
    }
    if (system) {
      os << ',';
      put(wt.sum_l1[i]);
    }
    os << '\n';
  }
}

void write_modal_json(std::ostream& os, const WaveTrajectory& wt) {
  char buf[32];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf;
  };
  auto put_array = [&](const char* name, const std::vector<double>& v, bool comma) {
    os << "\"" << name << "\":[";
    for (size_t k = 0; k < v.size(); ++k) {
      if (k) os << ',';
      put(v[k]);
    }
    os << ']';
    if (comma) os << ',';
  };
  os << "[\n";
  for (size_t i = 0; i < wt.snapshots.size(); ++i) {
    const ModalState& s = wt.snapshots[i];
    os << "{\"t\":";
    put(s.time);
    os << ',';
    put_array("u_pos", s.u_pos, true);
    put_array("u_vel", s.u_vel, !s.v_pos.empty() || !s.w_pos.empty());
    if (!s.v_pos.empty()) {
      put_array("v_pos", s.v_pos, true);
      put_array("v_vel", s.v_vel, !s.w_pos.empty());
    }
    if (!s.w_pos.empty()) put_array("w_pos", s.w_pos, false);
    os << '}';
    if (i + 1 < wt.snapshots.size()) os << ',';
    os << '\n';
  }
  os << "]\n";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("verify_theorem: " + what);
}

}  // namespace

TheoremReport verify_theorem(const WaveProblem& problem, const WaveTrajectory& wt,
                             const odi::Certificate& cert, double slack,
                             double jensen_tol) {
  require(slack >= 0.0 && slack <= 0.2, "slack must lie in [0, 0.2]");
  require(!wt.times.empty(), "empty trajectory");
  const SpectralConfig& cfg = problem.config();

  // The certificate must describe this run: same problem family, same
  // coefficients (lambda = 1 in this discretisation), same projected data.
  const bool system = cert.provenance == odi::Provenance::System;
  switch (cfg.problem) {
    case ProblemKind::SingleWave:
      require(cert.provenance == odi::Provenance::Wave, "certificate/problem mismatch");
      require(cert.params.b == cfg.C && cert.params.q == cfg.q,
              "certificate C mismatch");
      break;
    case ProblemKind::WaveSystem:
      require(system, "certificate/problem mismatch");
      break;
    case ProblemKind::HyperbolicElliptic:
      require(cert.provenance == odi::Provenance::Elliptic, "certificate/problem mismatch");
      require(cert.params.q == cfg.q, "certificate q mismatch");
      break;
    case ProblemKind::HyperbolicParabolic:
      require(cert.provenance == odi::Provenance::Parabolic, "certificate/problem mismatch");
      require(cert.params.q == cfg.q, "certificate q mismatch");
      break;
  }
  require(cert.params.a == kLambda1, "certificate eigenvalue mismatch (lambda = 1 here)");
  require(cert.l1_factor.has_value(), "certificate carries no L1 factor");

  const double w1_run = system ? wt.v_prime.front() + wt.v2_prime.front()
                               : wt.v_prime.front();
  const double w0_run = system ? wt.v.front() + wt.v2.front() : wt.v.front();
  const double tol0 = 1e-9 * std::max({1.0, std::abs(cert.v0), std::abs(cert.v1)});
  require(std::abs(w1_run - cert.v1) <= tol0 && std::abs(w0_run - cert.v0) <= tol0,
          "certificate initial data does not match the projected run data");

  TheoremReport rep;
  rep.t_star = cert.t_star;
  rep.worst_projection_margin = std::numeric_limits<double>::infinity();
  rep.worst_l1_margin = std::numeric_limits<double>::infinity();
  rep.min_jensen = std::numeric_limits<double>::infinity();
  constexpr double kUlpSlack = 1e-13;
  const double l1f = *cert.l1_factor;
  bool ok = true;
  auto fail = [&](const std::string& what) {
    if (ok) {
      rep.failure = what;
      ok = false;
    }
  };

  for (size_t i = 0; i < wt.times.size(); ++i) {
    const double t = wt.times[i];
    if (t > wt.last_trusted_time || !(t < cert.t_star)) break;
    const double env = odi::rate_envelope(cert, t);
    const double w = system ? wt.v_prime[i] + wt.v2_prime[i] : wt.v_prime[i];
    const double l1 = system ? wt.sum_l1[i] : wt.ut_l1[i];
    const double pm = w / env - (1.0 - slack);
    const double lm = l1 / (l1f * env) - (1.0 - slack);
    rep.worst_projection_margin = std::min(rep.worst_projection_margin, pm);
    rep.worst_l1_margin = std::min(rep.worst_l1_margin, lm);
    rep.min_jensen = std::min(rep.min_jensen, wt.jensen[i]);
    ++rep.checked;
    rep.last_checked_time = t;
    if (w < (1.0 - slack) * env * (1.0 - kUlpSlack)) {
      std::ostringstream os;
      os << "(i) projected derivative below envelope at t=" << t;
      fail(os.str());
    }
    if (l1 < (1.0 - slack) * l1f * env * (1.0 - kUlpSlack)) {
      std::ostringstream os;
      os << "(ii) L1 norm below l1_factor * envelope at t=" << t;
      fail(os.str());
    }
    if (wt.jensen[i] < -jensen_tol) {
      std::ostringstream os;
      os << "(iii) convexity residual " << wt.jensen[i] << " below -" << jensen_tol
         << " at t=" << t;
      fail(os.str());
    }
    if (cfg.problem == ProblemKind::HyperbolicElliptic) {
      const double err = std::abs(kLambda1 * wt.v2_prime[i] - wt.v_prime[i]);
      rep.identity_error = std::max(rep.identity_error, err);
      const double scale = std::max(1.0, std::abs(wt.v_prime[i]));
      if (err > 1e-9 * scale) {
        std::ostringstream os;
        os << "elliptic reduction identity violated at t=" << t;
        fail(os.str());
      }
    }
  }
  rep.pass = ok && rep.checked > 0;
  if (rep.checked == 0) rep.failure = "no trusted snapshot precedes the envelope pole";
  return rep;
}

}  // namespace blowup::spectral
