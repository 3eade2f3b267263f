#pragma once

#include <cstdint>
#include <string>

namespace blowup::cli {

// certify: closed-form verdicts on standard output.
int cmd_certify_scalar(double a, double b, double q, double v0, double v1);
int cmd_certify_wave(double lambda, double C, double q, double v0, double v1,
                     double phi_sup);
int cmd_certify_system(double a, double p, double q, double U0, double V0, double U1,
                       double V1, bool lambda_mode, double phi_sup);
int cmd_certify_elliptic(double lambda, double q, double U0, double U1, double phi_sup);
int cmd_certify_parabolic(double lambda, double q, double beta, double m, double p,
                          double U0, double V0, double U1, double phi_sup);

// region: boundary polyline CSV.
struct RegionArgs {
  std::string kind;  // subq | superq | levine | system
  double a = 1.0, b = 1.0, q = 1.5;
  double v0 = 0.0, v1 = 1.0;      // superq anchor
  double lambda = 1.0, C = 1.0;   // levine
  double p = 1.5;                 // system factor exponent
  double lo = 0.0, hi = 1.0;
  int samples = 400;
  std::string out;  // empty = stdout
};
int cmd_region(const RegionArgs& args);

// simulate: trajectory + verification report into the output directory.
int cmd_simulate(const std::string& subcommand, const std::string& config_path,
                 const std::string& out_override);

// compare-levine: sampled cross-membership of the two admissible regions.
int cmd_compare_levine(double lambda, double C, double q, long long samples,
                       std::uint64_t seed);

}  // namespace blowup::cli
