#include <iostream>

#include "blowup/odi/certificate.hpp"
#include "commands.hpp"
#include "exit_codes.hpp"
#include "json_out.hpp"

namespace blowup::cli {

namespace {

int emit(const odi::CertifyResult& result) {
  if (result.certified()) {
    std::cout << certificate_json(result.cert()).dump(2) << "\n";
    return kOk;
  }
  std::cout << not_certified_json(result).dump(2) << "\n";
  return kInconclusive;
}

}  // namespace

int cmd_certify_scalar(double a, double b, double q, double v0, double v1) {
  return emit(odi::certify_scalar(odi::OdiParams(a, b, q), v0, v1));
}

int cmd_certify_wave(double lambda, double C, double q, double v0, double v1,
                     double phi_sup) {
  return emit(odi::certify_wave(lambda, C, q, v0, v1, phi_sup));
}

int cmd_certify_system(double a, double p, double q, double U0, double V0, double U1,
                       double V1, bool lambda_mode, double phi_sup) {
  return emit(odi::certify_system(odi::SystemParams(a, p, q), U0, V0, U1, V1, lambda_mode,
                                  lambda_mode ? std::optional<double>(phi_sup)
                                              : std::nullopt));
}

int cmd_certify_elliptic(double lambda, double q, double U0, double U1, double phi_sup) {
  return emit(odi::reduce_elliptic(lambda, q, U0, U1, phi_sup));
}

int cmd_certify_parabolic(double lambda, double q, double beta, double m, double p,
                          double U0, double V0, double U1, double phi_sup) {
  return emit(odi::reduce_parabolic(lambda, q, beta, m, p, U0, V0, U1, phi_sup));
}

}  // namespace blowup::cli
