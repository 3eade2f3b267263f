#pragma once

#include <optional>
#include <string>

#include "blowup/odi/params.hpp"
#include "blowup/odi/region.hpp"

namespace blowup::odi {

enum class Provenance { Scalar, Wave, Elliptic, Parabolic, System };

const char* provenance_name(Provenance p);

/// Coefficients of the closed-form lower bound on the growing derivative,
///   envelope(t) = (base - slope t)^{1/(1-q)},
/// anchored at v1 for t = 0 and diverging at the pole t_star = base/slope.
struct Envelope {
  double base;   ///< v1^{1-q}
  double slope;  ///< (q-1)(1-eps) b
};

/// A blow-up verdict: admissible-region membership plus the quantitative
/// consequences (slack eps, blow-up time upper bound, derivative envelope).
///
/// For system certificates the scalar fields describe W = U + V: v0/v1 hold
/// W(0) and W'(0), params.q holds the envelope power p, and params.b is the
/// bookkeeping value that keeps slope = (q-1)(1-eps) b with eps = 1/2.
struct Certificate {
  OdiParams params;
  double v0;
  double v1;
  RegionKind region;
  double epsilon;  ///< 1/2 for q <= 2 (and system bookkeeping), root of f for q > 2
  double t_star;   ///< envelope.base / envelope.slope
  Envelope envelope;
  std::optional<double> l1_factor;  ///< 1/||phi||_inf for PDE-backed certificates
  Provenance provenance;
};

enum class CertifyStatus {
  Certified,
  NotInRegion,         ///< criterion inconclusive, NOT a global-existence claim
  HypothesisViolated,  ///< structural hypothesis failed (parabolic beta/ordering)
};

struct CertifyResult {
  CertifyStatus status;
  std::optional<Certificate> certificate;
  std::string detail;  ///< names the failed condition when not certified

  bool certified() const { return status == CertifyStatus::Certified; }
  const Certificate& cert() const { return certificate.value(); }
};

/// Scalar criterion: dispatches on q (sub-quadratic branch inclusive at
/// q = 2, eps = 1/2; super-quadratic branch with eps the smallest
/// admissible root).
CertifyResult certify_scalar(const OdiParams& params, double v0, double v1);

/// Evaluates the certificate's derivative lower bound at time t in
/// [0, t_star). Throws std::domain_error at or beyond the pole.
double rate_envelope(const Certificate& cert, double t);

/// Criterion for the coupled system. On success the certificate bounds
/// W' = U' + V' from below by
///   ((U1+V1)^{1-p} - (p-1)/(1+ap) 2^{1-p} t)^{1/(1-p)}.
/// When lambda_mode is set (sp.a carries the eigenvalue), phi_sup attaches
/// the L1 factor 1/||phi||_inf.
CertifyResult certify_system(const SystemParams& sp, double U0, double V0, double U1,
                             double V1, bool lambda_mode = false,
                             std::optional<double> phi_sup = std::nullopt);

/// Wave criterion: scalar criterion with a = lambda, b = C, plus the L1
/// lower bound ||u_t||_L1 >= (1/phi_sup) envelope(t).
CertifyResult certify_wave(double lambda, double C, double q, double v0, double v1,
                           double phi_sup);

/// Hyperbolic-elliptic reduction: scalar criterion with a = lambda,
/// b = lambda^{-q} on the projected data (U0, U1).
CertifyResult reduce_elliptic(double lambda, double q, double U0, double U1,
                              double phi_sup);

/// Hyperbolic-parabolic reduction: checks the structural hypothesis
/// (beta <= 0, or beta <= lambda with U0 - V0 >= 1) and the ordering
/// U0 - V0 >= 0, then applies the scalar criterion with a = lambda, b = 1.
/// Requires q > 1 and m >= 1 >= p.
CertifyResult reduce_parabolic(double lambda, double q, double beta, double m, double p,
                               double U0, double V0, double U1, double phi_sup);

}  // namespace blowup::odi
