#include "blowup/odi/certificate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blowup::odi {

namespace {

CertifyResult not_in_region(std::string detail) {
  return CertifyResult{CertifyStatus::NotInRegion, std::nullopt, std::move(detail)};
}

Certificate make_scalar_certificate(const OdiParams& params, double v0, double v1,
                                    RegionKind region, double eps, Provenance prov) {
  const double base = std::pow(v1, 1.0 - params.q);
  const double slope = (params.q - 1.0) * (1.0 - eps) * params.b;
  return Certificate{params,       v0,           v1,  std::move(region), eps,
                     base / slope, {base, slope}, std::nullopt, prov};
}

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Scalar: return "scalar";
    case Provenance::Wave: return "wave";
    case Provenance::Elliptic: return "elliptic";
    case Provenance::Parabolic: return "parabolic";
    case Provenance::System: return "system";
  }
  return "unknown";
}

CertifyResult certify_scalar(const OdiParams& params, double v0, double v1) {
  if (params.q <= 2.0) {
    const SubQuadraticConstants consts = sub_quadratic_constants(params);
    if (!(v1 > 0.0 && v1 > boundary_F(consts, params, v0))) {
      std::ostringstream os;
      os << "initial data (" << v0 << ", " << v1
         << ") is not above the admissible boundary curve (q <= 2 branch)";
      return not_in_region(os.str());
    }
    return {CertifyStatus::Certified,
            make_scalar_certificate(params, v0, v1, SubQuadraticRegion{consts}, 0.5,
                                    Provenance::Scalar),
            {}};
  }
  if (!in_region_super_quadratic(params, v0, v1)) {
    std::ostringstream os;
    os << "initial data (" << v0 << ", " << v1
       << ") fails the admissibility condition f(1) > 0 (q > 2 branch)";
    return not_in_region(os.str());
  }
  const double eps = epsilon_min(params, v0, v1);
  const double A = eps * params.b * std::pow(v1, params.q) - params.a * v0;
  return {CertifyStatus::Certified,
          make_scalar_certificate(params, v0, v1, SuperQuadraticRegion{eps, A}, eps,
                                  Provenance::Scalar),
          {}};
}

double rate_envelope(const Certificate& cert, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("rate_envelope: t must be nonnegative");
  if (!(t < cert.t_star))
    throw std::domain_error("rate_envelope: t is at or beyond the envelope pole");
  return std::pow(cert.envelope.base - cert.envelope.slope * t,
                  1.0 / (1.0 - cert.params.q));
}

CertifyResult certify_system(const SystemParams& sp, double U0, double V0, double U1,
                             double V1, bool lambda_mode,
                             std::optional<double> phi_sup) {
  if (!in_region_system(sp, U0, V0, U1, V1)) {
    std::ostringstream os;
    os << "system data (U0,V0,U1,V1)=(" << U0 << "," << V0 << "," << U1 << "," << V1
       << ") fails the coupled admissibility conditions";
    return not_in_region(os.str());
  }
  const double W0 = U0 + V0;
  const double W1 = U1 + V1;
  const double base = std::pow(W1, 1.0 - sp.p);
  const double slope = (sp.p - 1.0) * sp.beta_sys * std::pow(2.0, 1.0 - sp.p);
  // Bookkeeping b keeps the scalar identity slope = (q-1)(1-eps) b with
  // eps = 1/2 and q = p.
  const double b_eff = sp.beta_sys * std::pow(2.0, 2.0 - sp.p);
  Certificate cert{OdiParams(sp.a, b_eff, sp.p),
                   W0,
                   W1,
                   SystemRegion{sp},
                   0.5,
                   base / slope,
                   {base, slope},
                   std::nullopt,
                   Provenance::System};
  if (lambda_mode) {
    if (!phi_sup || !(*phi_sup > 0.0))
      throw std::invalid_argument("certify_system: lambda_mode requires phi_sup > 0");
    cert.l1_factor = 1.0 / *phi_sup;
  }
  return {CertifyStatus::Certified, std::move(cert), {}};
}

CertifyResult certify_wave(double lambda, double C, double q, double v0, double v1,
                           double phi_sup) {
  if (!(phi_sup > 0.0))
    throw std::invalid_argument("certify_wave: phi_sup must be positive");
  CertifyResult res = certify_scalar(OdiParams(lambda, C, q), v0, v1);
  if (res.certified()) {
    res.certificate->provenance = Provenance::Wave;
    res.certificate->l1_factor = 1.0 / phi_sup;
  }
  return res;
}

CertifyResult reduce_elliptic(double lambda, double q, double U0, double U1,
                              double phi_sup) {
  if (!(phi_sup > 0.0))
    throw std::invalid_argument("reduce_elliptic: phi_sup must be positive");
  if (!(lambda > 0.0))
    throw std::invalid_argument("reduce_elliptic: lambda must be positive");
  CertifyResult res =
      certify_scalar(OdiParams(lambda, std::pow(lambda, -q), q), U0, U1);
  if (res.certified()) {
    res.certificate->provenance = Provenance::Elliptic;
    res.certificate->l1_factor = 1.0 / phi_sup;
  }
  return res;
}

CertifyResult reduce_parabolic(double lambda, double q, double beta, double m, double p,
                               double U0, double V0, double U1, double phi_sup) {
  if (!(phi_sup > 0.0))
    throw std::invalid_argument("reduce_parabolic: phi_sup must be positive");
  if (!(lambda > 0.0))
    throw std::invalid_argument("reduce_parabolic: lambda must be positive");
  if (!(m >= 1.0))
    throw std::invalid_argument("reduce_parabolic: m must be >= 1");
  if (!(p <= 1.0))
    throw std::invalid_argument("reduce_parabolic: p must be <= 1");
  const bool beta_ok = beta <= 0.0 || (beta <= lambda && U0 - V0 >= 1.0);
  if (!beta_ok) {
    std::ostringstream os;
    os << "hypothesis on beta/ordering violated: beta=" << beta
       << " requires beta <= 0 or (beta <= lambda and U0 - V0 >= 1), got U0-V0="
       << U0 - V0;
    return {CertifyStatus::HypothesisViolated, std::nullopt, os.str()};
  }
  if (!(U0 - V0 >= 0.0)) {
    std::ostringstream os;
    os << "hypothesis on beta/ordering violated: projected gap U0-V0=" << U0 - V0
       << " must be nonnegative";
    return {CertifyStatus::HypothesisViolated, std::nullopt, os.str()};
  }
  CertifyResult res = certify_scalar(OdiParams(lambda, 1.0, q), U0, U1);
  if (res.certified()) {
    res.certificate->provenance = Provenance::Parabolic;
    res.certificate->l1_factor = 1.0 / phi_sup;
  }
  return res;
}

}  // namespace blowup::odi
