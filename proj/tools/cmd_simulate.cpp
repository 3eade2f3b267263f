#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "blowup/ode/diagnostics.hpp"
#include "blowup/odi/certificate.hpp"
#include "blowup/spectral/simulate.hpp"
#include "commands.hpp"
#include "exit_codes.hpp"
#include "json_out.hpp"
#include "run_config.hpp"

namespace blowup::cli {

namespace {

namespace fs = std::filesystem;

nlohmann::json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("simulate: cannot open config file " + path);
  return nlohmann::json::parse(is);
}

fs::path prepare_output(const RunConfig& rc, const ordered_json& echo) {
  const fs::path dir(rc.output_dir);
  fs::create_directories(dir);
  write_json_file(dir / "config_echo.json", echo);
  return dir;
}

int finish_ode_run(const RunConfig& rc, const odi::Certificate& cert,
                   const ode::Trajectory& traj) {
  const ordered_json echo = echo_config(rc);
  std::cout << echo.dump(2) << "\n";
  const fs::path dir = prepare_output(rc, echo);

  std::ostringstream csv;
  ode::write_trajectory_csv(csv, traj);
  write_text_file(dir / "trajectory.csv", csv.str());

  ordered_json report;
  report["certificate"] = certificate_json(cert);
  report["termination"] = termination_json(traj.termination);
  if (traj.termination.kind != ode::TerminationKind::Survived) {
    try {
      report["blowup_fit"] = blowup_fit_json(
          ode::detect_blowup(traj, rc.integrator, cert.params.q));
    } catch (const std::exception& e) {
      report["blowup_fit"] = ordered_json{{"error", e.what()}};
    }
  }
  const ode::EnvelopeReport env = ode::check_envelope(traj, cert, rc.slack);
  report["envelope_check"] = envelope_report_json(env);
  report["pass"] = env.pass;
  write_json_file(dir / "report.json", report);
  return env.pass ? kOk : kVerificationFailure;
}

int simulate_odi(RunConfig& rc) {
  const OdiCase& c = *rc.odi;
  const odi::OdiParams params(c.a, c.b, c.q);
  const odi::CertifyResult res = odi::certify_scalar(params, c.v0, c.v1);
  if (!res.certified()) {
    std::cout << not_certified_json(res).dump(2) << "\n";
    return kInconclusive;
  }
  if (!rc.horizon_given) rc.integrator.horizon = 2.0 * res.cert().t_star;
  const ode::Trajectory traj = ode::integrate_ivp(ode::extremal_scalar_field(params),
                                                  {c.v0, c.v1}, rc.integrator);
  return finish_ode_run(rc, res.cert(), traj);
}

int simulate_system(RunConfig& rc) {
  const SystemCase& c = *rc.system;
  const odi::SystemParams sp(c.a, c.p, c.q);
  const odi::CertifyResult res =
      odi::certify_system(sp, c.U0, c.V0, c.U1, c.V1, c.lambda_mode,
                          c.lambda_mode ? std::optional<double>(c.phi_sup) : std::nullopt);
  if (!res.certified()) {
    std::cout << not_certified_json(res).dump(2) << "\n";
    return kInconclusive;
  }
  if (!rc.horizon_given) rc.integrator.horizon = 2.0 * res.cert().t_star;
  const ode::Trajectory traj = ode::integrate_ivp(
      ode::extremal_system_field(sp), {c.U0, c.U1, c.V0, c.V1}, rc.integrator);
  return finish_ode_run(rc, res.cert(), traj);
}

int simulate_spectral(RunConfig& rc) {
  const SpectralCase& sc = *rc.spectral;
  const auto kind = sc.spec.problem;
  std::vector<double> aux0, aux1;
  if (kind == spectral::ProblemKind::WaveSystem) {
    aux0 = sc.v0_modes;
    aux1 = sc.v1_modes;
  } else if (kind == spectral::ProblemKind::HyperbolicParabolic) {
    aux0 = sc.w0_modes;
  }
  const spectral::WaveProblem prob(sc.spec, sc.u0_modes, sc.u1_modes, aux0, aux1);
  const spectral::ModalState s0 = prob.unpack(0.0, prob.initial_state());
  const spectral::Projection pu = spectral::project_eigen(s0);

  odi::CertifyResult res{odi::CertifyStatus::NotInRegion, std::nullopt, ""};
  switch (kind) {
    case spectral::ProblemKind::SingleWave:
      res = odi::certify_wave(spectral::kLambda1, sc.spec.C, sc.spec.q, pu.v, pu.v_prime,
                              spectral::kPhiSup);
      break;
    case spectral::ProblemKind::WaveSystem: {
      const spectral::Projection pv = prob.project_v(s0);
      res = odi::certify_system(odi::SystemParams(spectral::kLambda1, sc.spec.p, sc.spec.q),
                                pu.v, pv.v, pu.v_prime, pv.v_prime, true,
                                spectral::kPhiSup);
      break;
    }
    case spectral::ProblemKind::HyperbolicElliptic:
      res = odi::reduce_elliptic(spectral::kLambda1, sc.spec.q, pu.v, pu.v_prime,
                                 spectral::kPhiSup);
      break;
    case spectral::ProblemKind::HyperbolicParabolic: {
      const double gap0 =
          std::numbers::pi / 4.0 * (s0.w_pos.empty() ? 0.0 : s0.w_pos.front());
      res = odi::reduce_parabolic(spectral::kLambda1, sc.spec.q, sc.spec.beta, sc.spec.m,
                                  sc.spec.p, pu.v, pu.v - gap0, pu.v_prime,
                                  spectral::kPhiSup);
      break;
    }
  }
  if (!res.certified()) {
    std::cout << not_certified_json(res).dump(2) << "\n";
    return kInconclusive;
  }
  const odi::Certificate& cert = res.cert();

  const ordered_json echo = echo_config(rc);
  std::cout << echo.dump(2) << "\n";
  const fs::path dir = prepare_output(rc, echo);

  const spectral::WaveTrajectory wt = spectral::simulate_wave(prob, rc.integrator);
  std::ostringstream csv;
  spectral::write_wave_csv(csv, wt);
  write_text_file(dir / "trajectory.csv", csv.str());
  if (rc.dump_modal) {
    std::ostringstream js;
    spectral::write_modal_json(js, wt);
    write_text_file(dir / "modal.json", js.str());
  }

  const spectral::TheoremReport rep = spectral::verify_theorem(prob, wt, cert, rc.slack);
  const auto indicator = wt.indicator_time();
  const bool indicator_ok =
      indicator.has_value() && *indicator <= (1.0 + rc.slack) * cert.t_star;

  ordered_json report;
  report["certificate"] = certificate_json(cert);
  report["termination"] = termination_json(wt.termination);
  report["indicator_time"] = indicator ? ordered_json(*indicator) : ordered_json(nullptr);
  report["resolution_loss"] =
      ordered_json{{"flag", wt.resolution_loss},
                   {"time", wt.resolution_loss ? ordered_json(wt.resolution_loss_time)
                                               : ordered_json(nullptr)},
                   {"last_trusted_time", wt.last_trusted_time}};
  report["theorem_check"] = theorem_report_json(rep);
  if (!indicator_ok && rep.failure.empty())
    report["failure"] = indicator
                            ? "blow-up indicator later than the certified bound"
                            : "no blow-up indicator before the horizon";
  const bool pass = rep.pass && indicator_ok;
  report["pass"] = pass;
  write_json_file(dir / "report.json", report);
  return pass ? kOk : kVerificationFailure;
}

}  // namespace

int cmd_simulate(const std::string& subcommand, const std::string& config_path,
                 const std::string& out_override) {
  RunConfig rc = parse_run_config(load_json(config_path), subcommand);
  if (!out_override.empty()) rc.output_dir = out_override;
  if (subcommand == "odi") return simulate_odi(rc);
  if (subcommand == "system") return simulate_system(rc);
  return simulate_spectral(rc);
}

}  // namespace blowup::cli
