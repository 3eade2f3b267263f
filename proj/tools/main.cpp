#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "commands.hpp"
#include "exit_codes.hpp"

// Command-line surface: certification verdicts, boundary polylines,
// verified simulations, and the two-region comparison. Exit codes:
// 0 ok, 2 invalid input, 3 inconclusive certificate, 4 verification failure.
int main(int argc, char** argv) {
  using namespace blowup::cli;

  CLI::App app{"finite-time blow-up certification and simulation toolkit"};
  app.require_subcommand(1);

  // certify ------------------------------------------------------------
  auto* certify = app.add_subcommand("certify", "closed-form blow-up certificates");
  certify->require_subcommand(1);

  struct {
    double a = 1, b = 1, q = 1.5, v0 = 0, v1 = 1;
    double lambda = 1, C = 1, phi_sup = 0.5;
    double p = 1.5, U0 = 0, V0 = 0, U1 = 0, V1 = 0;
    double beta = 0, m = 1;
    bool lambda_mode = false;
  } ca;

  auto* c_scalar = certify->add_subcommand("scalar", "scalar inequality criterion");
  c_scalar->add_option("--a", ca.a)->required();
  c_scalar->add_option("--b", ca.b)->required();
  c_scalar->add_option("--q", ca.q)->required();
  c_scalar->add_option("--v0", ca.v0)->required();
  c_scalar->add_option("--v1", ca.v1)->required();

  auto* c_wave = certify->add_subcommand("wave", "wave inequality criterion");
  c_wave->add_option("--lambda", ca.lambda)->required();
  c_wave->add_option("--C", ca.C)->required();
  c_wave->add_option("--q", ca.q)->required();
  c_wave->add_option("--v0", ca.v0)->required();
  c_wave->add_option("--v1", ca.v1)->required();
  c_wave->add_option("--phi-sup", ca.phi_sup, "sup of the unit-integral eigenfunction");

  auto* c_system = certify->add_subcommand("system", "coupled system criterion");
  c_system->add_option("--a", ca.a)->required();
  c_system->add_option("--p", ca.p)->required();
  c_system->add_option("--q", ca.q)->required();
  c_system->add_option("--U0", ca.U0)->required();
  c_system->add_option("--V0", ca.V0)->required();
  c_system->add_option("--U1", ca.U1)->required();
  c_system->add_option("--V1", ca.V1)->required();
  c_system->add_flag("--lambda-mode", ca.lambda_mode,
                     "treat a as the eigenvalue and attach the L1 factor");
  c_system->add_option("--phi-sup", ca.phi_sup);

  auto* c_elliptic = certify->add_subcommand("elliptic", "hyperbolic-elliptic reduction");
  c_elliptic->add_option("--lambda", ca.lambda)->required();
  c_elliptic->add_option("--q", ca.q)->required();
  c_elliptic->add_option("--U0", ca.U0)->required();
  c_elliptic->add_option("--U1", ca.U1)->required();
  c_elliptic->add_option("--phi-sup", ca.phi_sup);

  auto* c_parabolic =
      certify->add_subcommand("parabolic", "hyperbolic-parabolic reduction");
  c_parabolic->add_option("--lambda", ca.lambda)->required();
  c_parabolic->add_option("--q", ca.q)->required();
  c_parabolic->add_option("--beta", ca.beta)->required();
  c_parabolic->add_option("--m", ca.m)->required();
  c_parabolic->add_option("--p", ca.p)->required();
  c_parabolic->add_option("--U0", ca.U0)->required();
  c_parabolic->add_option("--V0", ca.V0)->required();
  c_parabolic->add_option("--U1", ca.U1)->required();
  c_parabolic->add_option("--phi-sup", ca.phi_sup);

  // region --------------------------------------------------------------
  RegionArgs ra;
  auto* region = app.add_subcommand("region", "admissible-region boundary polyline (CSV)");
  region->add_option("--kind", ra.kind, "subq | superq | levine | system")->required();
  region->add_option("--a", ra.a);
  region->add_option("--b", ra.b);
  region->add_option("--q", ra.q);
  region->add_option("--v0", ra.v0);
  region->add_option("--v1", ra.v1);
  region->add_option("--lambda", ra.lambda);
  region->add_option("--C", ra.C);
  region->add_option("--p", ra.p);
  region->add_option("--range", [&ra](const std::vector<std::string>& vals) {
        ra.lo = std::stod(vals.at(0));
        ra.hi = std::stod(vals.at(1));
        return true;
      },
      "lo hi")
      ->expected(2)
      ->required();
  region->add_option("--samples", ra.samples);
  region->add_option("--out", ra.out, "write to a file instead of stdout");

  // simulate ------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "verified simulation runs");
  simulate->require_subcommand(1);
  std::string config_path, out_override;
  for (const char* name : {"odi", "system", "wave", "elliptic", "parabolic"}) {
    auto* sub = simulate->add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_override, "override the output directory");
  }

  // compare-levine --------------------------------------------------------
  struct {
    double lambda = 1, C = 1, q = 1.5;
    long long samples = 10000;
    std::uint64_t seed = 0;
  } cl;
  auto* compare = app.add_subcommand("compare-levine",
                                     "sampled comparison of the two admissible regions");
  compare->add_option("--lambda", cl.lambda)->required();
  compare->add_option("--C", cl.C)->required();
  compare->add_option("--q", cl.q)->required();
  compare->add_option("--samples", cl.samples);
  compare->add_option("--seed", cl.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (c_scalar->parsed()) return cmd_certify_scalar(ca.a, ca.b, ca.q, ca.v0, ca.v1);
    if (c_wave->parsed())
      return cmd_certify_wave(ca.lambda, ca.C, ca.q, ca.v0, ca.v1, ca.phi_sup);
    if (c_system->parsed())
      return cmd_certify_system(ca.a, ca.p, ca.q, ca.U0, ca.V0, ca.U1, ca.V1,
                                ca.lambda_mode, ca.phi_sup);
    if (c_elliptic->parsed())
      return cmd_certify_elliptic(ca.lambda, ca.q, ca.U0, ca.U1, ca.phi_sup);
    if (c_parabolic->parsed())
      return cmd_certify_parabolic(ca.lambda, ca.q, ca.beta, ca.m, ca.p, ca.U0, ca.V0,
                                   ca.U1, ca.phi_sup);
    if (region->parsed()) return cmd_region(ra);
    if (simulate->parsed()) {
      const std::string sub = simulate->get_subcommands().front()->get_name();
      return cmd_simulate(sub, config_path, out_override);
    }
    if (compare->parsed())
      return cmd_compare_levine(cl.lambda, cl.C, cl.q, cl.samples, cl.seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
