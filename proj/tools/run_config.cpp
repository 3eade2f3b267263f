#include "run_config.hpp"

#include <set>
#include <stdexcept>

namespace blowup::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) bad(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) bad("unknown key \"" + key + "\" in " + where);
}

double req_double(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) bad(where + " is missing required key \"" + key + "\"");
  if (!obj[key].is_number()) bad(where + "." + key + " must be a number");
  return obj[key].get<double>();
}

double opt_double(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) bad(where + "." + key + " must be a number");
  return obj[key].get<double>();
}

bool opt_bool(const json& obj, const std::string& where, const std::string& key,
              bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_boolean()) bad(where + "." + key + " must be a boolean");
  return obj[key].get<bool>();
}

std::vector<double> opt_mode_array(const json& obj, const std::string& where,
                                   const std::string& key) {
  if (!obj.contains(key)) return {};
  if (!obj[key].is_array()) bad(where + "." + key + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : obj[key]) {
    if (!v.is_number()) bad(where + "." + key + " must contain numbers only");
    out.push_back(v.get<double>());
  }
  return out;
}

spectral::ProblemKind problem_kind_for(const std::string& subcommand,
                                       const json& spec_obj) {
  std::string name;
  if (subcommand == "wave")
    name = "single_wave";
  else if (subcommand == "elliptic")
    name = "hyperbolic_elliptic";
  else if (subcommand == "parabolic")
    name = "hyperbolic_parabolic";
  if (spec_obj.contains("problem")) {
    if (!spec_obj["problem"].is_string()) bad("spectral.problem must be a string");
    name = spec_obj["problem"].get<std::string>();
  }
  if (name == "single_wave") return spectral::ProblemKind::SingleWave;
  if (name == "wave_system") return spectral::ProblemKind::WaveSystem;
  if (name == "hyperbolic_elliptic") return spectral::ProblemKind::HyperbolicElliptic;
  if (name == "hyperbolic_parabolic") return spectral::ProblemKind::HyperbolicParabolic;
  bad("spectral.problem \"" + name + "\" is not one of single_wave, wave_system, "
      "hyperbolic_elliptic, hyperbolic_parabolic");
}

void check_problem_matches(const std::string& subcommand, spectral::ProblemKind kind) {
  const bool ok =
      (subcommand == "wave" && (kind == spectral::ProblemKind::SingleWave ||
                                kind == spectral::ProblemKind::WaveSystem)) ||
      (subcommand == "elliptic" && kind == spectral::ProblemKind::HyperbolicElliptic) ||
      (subcommand == "parabolic" && kind == spectral::ProblemKind::HyperbolicParabolic);
  if (!ok)
    bad(std::string("spectral.problem \"") + spectral::problem_name(kind) +
        "\" does not match the simulate subcommand \"" + subcommand + "\"");
}

}  // namespace

RunConfig parse_run_config(const json& doc, const std::string& subcommand) {
  RunConfig rc;
  rc.subcommand = subcommand;
  const bool is_spectral =
      subcommand == "wave" || subcommand == "elliptic" || subcommand == "parabolic";
  const std::string case_key = subcommand == "odi"      ? "odi"
                               : subcommand == "system" ? "system"
                                                        : "spectral";

  check_keys(doc, "config",
             {case_key, "integrator", "slack", "output_dir", "seed", "dump_modal"});
  if (!doc.contains(case_key)) bad("config is missing the \"" + case_key + "\" block");
  const json& block = doc[case_key];

  if (subcommand == "odi") {
    check_keys(block, "odi", {"a", "b", "q", "v0", "v1"});
    rc.odi = OdiCase{req_double(block, "odi", "a"), req_double(block, "odi", "b"),
                     req_double(block, "odi", "q"), req_double(block, "odi", "v0"),
                     req_double(block, "odi", "v1")};
  } else if (subcommand == "system") {
    check_keys(block, "system",
               {"a", "p", "q", "U0", "V0", "U1", "V1", "lambda_mode", "phi_sup"});
    SystemCase sc;
    sc.a = req_double(block, "system", "a");
    sc.p = req_double(block, "system", "p");
    sc.q = req_double(block, "system", "q");
    sc.U0 = req_double(block, "system", "U0");
    sc.V0 = req_double(block, "system", "V0");
    sc.U1 = req_double(block, "system", "U1");
    sc.V1 = req_double(block, "system", "V1");
    sc.lambda_mode = opt_bool(block, "system", "lambda_mode", false);
    sc.phi_sup = opt_double(block, "system", "phi_sup", 0.5);
    rc.system = sc;
  } else {
    check_keys(block, "spectral",
               {"n_modes", "n_quad", "C", "q", "problem", "p", "beta", "m", "horizon",
                "u0_modes", "u1_modes", "v0_modes", "v1_modes", "w0_modes"});
    SpectralCase sc;
    auto& spec = sc.spec;
    spec.problem = problem_kind_for(subcommand, block);
    check_problem_matches(subcommand, spec.problem);
    const double n_modes = req_double(block, "spectral", "n_modes");
    if (n_modes < 1.0 || n_modes != static_cast<int>(n_modes))
      bad("spectral.n_modes must be a positive integer");
    spec.n_modes = static_cast<int>(n_modes);
    const double n_quad =
        opt_double(block, "spectral", "n_quad", 4.0 * spec.n_modes);
    if (n_quad < 1.0 || n_quad != static_cast<int>(n_quad))
      bad("spectral.n_quad must be a positive integer");
    spec.n_quad = static_cast<int>(n_quad);
    spec.C = opt_double(block, "spectral", "C", 1.0);
    spec.q = req_double(block, "spectral", "q");
    spec.horizon = req_double(block, "spectral", "horizon");
    spec.beta = opt_double(block, "spectral", "beta", 0.0);
    spec.m = opt_double(block, "spectral", "m", 1.0);
    if (spec.problem == spectral::ProblemKind::WaveSystem)
      spec.p = req_double(block, "spectral", "p");
    else
      spec.p = opt_double(block, "spectral", "p", 1.0);
    // The certificate reductions for the coupled variants carry unit growth
    // constants; a C other than 1 would have nothing to verify against.
    if (spec.problem != spectral::ProblemKind::SingleWave && spec.C != 1.0)
      bad("spectral.C must be 1 for coupled problems (the reductions use unit gain)");
    // Keys that only make sense for one problem family are rejected
    // elsewhere rather than silently dropped.
    const bool is_system = spec.problem == spectral::ProblemKind::WaveSystem;
    const bool is_parabolic = spec.problem == spectral::ProblemKind::HyperbolicParabolic;
    if (!is_parabolic && (block.contains("beta") || block.contains("m")))
      bad("spectral.beta/m apply to hyperbolic_parabolic only");
    if (!is_system && !is_parabolic && block.contains("p"))
      bad("spectral.p applies to wave_system and hyperbolic_parabolic only");
    if (!is_system && (block.contains("v0_modes") || block.contains("v1_modes")))
      bad("spectral.v0_modes/v1_modes apply to wave_system only");
    if (!is_parabolic && block.contains("w0_modes"))
      bad("spectral.w0_modes applies to hyperbolic_parabolic only");
    spec.validate();
    sc.u0_modes = opt_mode_array(block, "spectral", "u0_modes");
    sc.u1_modes = opt_mode_array(block, "spectral", "u1_modes");
    sc.v0_modes = opt_mode_array(block, "spectral", "v0_modes");
    sc.v1_modes = opt_mode_array(block, "spectral", "v1_modes");
    sc.w0_modes = opt_mode_array(block, "spectral", "w0_modes");
    rc.spectral = std::move(sc);
  }

  const json integ = doc.contains("integrator") ? doc["integrator"] : json::object();
  check_keys(integ, "integrator",
             {"rel_tol", "abs_tol", "blowup_threshold", "max_steps", "min_step",
              "horizon"});
  ode::IntegratorOptions opts;
  opts.rel_tol = opt_double(integ, "integrator", "rel_tol", opts.rel_tol);
  opts.abs_tol = opt_double(integ, "integrator", "abs_tol", opts.abs_tol);
  opts.blowup_threshold =
      opt_double(integ, "integrator", "blowup_threshold", opts.blowup_threshold);
  const double max_steps =
      opt_double(integ, "integrator", "max_steps", static_cast<double>(opts.max_steps));
  if (max_steps < 1.0) bad("integrator.max_steps must be positive");
  opts.max_steps = static_cast<long long>(max_steps);
  opts.min_step = opt_double(integ, "integrator", "min_step", opts.min_step);
  if (integ.contains("horizon")) {
    if (is_spectral)
      bad("integrator.horizon is not accepted for spectral runs; set spectral.horizon");
    opts.horizon = req_double(integ, "integrator", "horizon");
    rc.horizon_given = true;
  } else if (is_spectral) {
    opts.horizon = rc.spectral->spec.horizon;
    rc.horizon_given = true;
  }
  rc.integrator = opts;

  rc.slack = opt_double(doc, "config", "slack", 0.0);
  if (!(rc.slack >= 0.0 && rc.slack <= 0.1)) bad("slack must lie in [0, 0.1]");
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) bad("output_dir must be a string");
    rc.output_dir = doc["output_dir"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      bad("seed must be a nonnegative integer");
    const auto s = doc["seed"].get<long long>();
    if (s < 0) bad("seed must be a nonnegative integer");
    rc.seed = static_cast<std::uint64_t>(s);
  }
  rc.dump_modal = opt_bool(doc, "config", "dump_modal", false);
  if (rc.dump_modal && !is_spectral) bad("dump_modal applies to spectral runs only");
  return rc;
}

ordered_json echo_config(const RunConfig& rc) {
  ordered_json j;
  if (rc.odi) {
    const auto& c = *rc.odi;
    j["odi"] = {{"a", c.a}, {"b", c.b}, {"q", c.q}, {"v0", c.v0}, {"v1", c.v1}};
  }
  if (rc.system) {
    const auto& c = *rc.system;
    j["system"] = {{"a", c.a},   {"p", c.p},   {"q", c.q},
                   {"U0", c.U0}, {"V0", c.V0}, {"U1", c.U1},
                   {"V1", c.V1}, {"lambda_mode", c.lambda_mode},
                   {"phi_sup", c.phi_sup}};
  }
  if (rc.spectral) {
    const auto& c = *rc.spectral;
    ordered_json s;
    s["problem"] = spectral::problem_name(c.spec.problem);
    s["n_modes"] = c.spec.n_modes;
    s["n_quad"] = c.spec.n_quad;
    s["C"] = c.spec.C;
    s["q"] = c.spec.q;
    if (c.spec.problem == spectral::ProblemKind::WaveSystem ||
        c.spec.problem == spectral::ProblemKind::HyperbolicParabolic)
      s["p"] = c.spec.p;
    if (c.spec.problem == spectral::ProblemKind::HyperbolicParabolic) {
      s["beta"] = c.spec.beta;
      s["m"] = c.spec.m;
    }
    s["horizon"] = c.spec.horizon;
    s["u0_modes"] = c.u0_modes;
    s["u1_modes"] = c.u1_modes;
    if (c.spec.problem == spectral::ProblemKind::WaveSystem) {
      s["v0_modes"] = c.v0_modes;
      s["v1_modes"] = c.v1_modes;
    }
    if (c.spec.problem == spectral::ProblemKind::HyperbolicParabolic)
      s["w0_modes"] = c.w0_modes;
    j["spectral"] = s;
  }
  j["integrator"] = {{"rel_tol", rc.integrator.rel_tol},
                     {"abs_tol", rc.integrator.abs_tol},
                     {"blowup_threshold", rc.integrator.blowup_threshold},
                     {"max_steps", rc.integrator.max_steps},
                     {"min_step", rc.integrator.min_step}};
  if (rc.subcommand == "odi" || rc.subcommand == "system")
    j["integrator"]["horizon"] = rc.integrator.horizon;
  j["slack"] = rc.slack;
  j["output_dir"] = rc.output_dir;
  j["seed"] = rc.seed;
  if (rc.spectral) j["dump_modal"] = rc.dump_modal;
  return j;
}

}  // namespace blowup::cli
