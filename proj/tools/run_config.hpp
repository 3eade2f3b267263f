#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "blowup/ode/integrator.hpp"
#include "blowup/spectral/problem.hpp"
#include "json_out.hpp"

namespace blowup::cli {

struct OdiCase {
  double a, b, q, v0, v1;
};

struct SystemCase {
  double a, p, q, U0, V0, U1, V1;
  bool lambda_mode = false;
  double phi_sup = 0.5;
};

struct SpectralCase {
  spectral::SpectralConfig spec;
  std::vector<double> u0_modes, u1_modes, v0_modes, v1_modes, w0_modes;
};

/// Simulation run description: one case block matching the subcommand, the
/// integrator settings, and bookkeeping fields. Unknown keys anywhere are
/// rejected; every default is materialised so the echoed document is
/// complete and reproducible.
struct RunConfig {
  std::string subcommand;  // odi | system | wave | elliptic | parabolic
  std::optional<OdiCase> odi;
  std::optional<SystemCase> system;
  std::optional<SpectralCase> spectral;
  ode::IntegratorOptions integrator;
  bool horizon_given = false;  // odi/system: horizon defaults to 2 t_star
  double slack = 0.0;
  std::string output_dir = "out";
  std::uint64_t seed = 0;
  bool dump_modal = false;
};

RunConfig parse_run_config(const nlohmann::json& doc, const std::string& subcommand);

/// The fully-defaulted document; feeding it back reproduces the run.
ordered_json echo_config(const RunConfig& rc);

}  // namespace blowup::cli
