#pragma once

#include <optional>
#include <string>

#include "blowup/ode/integrator.hpp"
#include "blowup/odi/certificate.hpp"

namespace blowup::ode {

/// Result of fitting the trajectory tail to y ~ c (T - t)^{-gamma}.
struct BlowupFit {
  double t_est;      ///< refined singularity time estimate
  double exponent;   ///< gamma recovered by the free-exponent fit
  double residual;   ///< RMS residual of the log-log fit at the optimum
  int tail_points;   ///< number of samples used
};

/// Refines the raw threshold-crossing time by fitting the last accepted
/// steps (those exceeding 0.01 * blowup_threshold) to a reciprocal power
/// law. The exponent is always estimated freely (log-log regression with
/// the pole location optimised); when q_power is supplied, t_est is
/// refined further with the exponent pinned to 1/(q-1), for which
/// y^{1-q} is linear in t.
///
/// Requires a BlownUp or StepCollapse trajectory; throws
/// std::invalid_argument otherwise and std::runtime_error when fewer than
/// 8 tail samples are available.
BlowupFit detect_blowup(const Trajectory& traj, const IntegratorOptions& opts,
                        std::optional<double> q_power = std::nullopt);

/// Minimum inward-normal component of the extremal field along a region
/// boundary. Nonnegative values (up to roundoff) certify that the field
/// enters the region.
struct InwardnessReport {
  double min_inward;
  double argmin_x;
  int samples;   ///< boundary points evaluated
  int skipped;   ///< system sweep only: edge points outside the reachable set
};

InwardnessReport boundary_inwardness(const odi::OdiParams& params,
                                     const odi::SubQuadraticRegion& region, int n_samples,
                                     double x_lo, double x_hi);

InwardnessReport boundary_inwardness(const odi::OdiParams& params,
                                     const odi::SuperQuadraticRegion& region, int n_samples,
                                     double x_lo, double x_hi);

/// Product-region sweep along the edge where both factor boundaries are
/// active (z = x); edge points violating the trajectory-invariant bound
/// t^{q-1} y^{p-1} >= (alpha a)^2, which certified data can never reach,
/// are skipped and counted.
InwardnessReport boundary_inwardness(const odi::SystemRegion& region, int n_samples,
                                     double x_lo, double x_hi);

/// Dispatcher over RegionKind. Scalar kinds require params; the Levine
/// wedge has no entering-field boundary and is rejected.
InwardnessReport boundary_inwardness(const odi::RegionKind& kind,
                                     const std::optional<odi::OdiParams>& params,
                                     int n_samples, double x_lo, double x_hi);

/// Pointwise comparison of a trajectory against a certificate envelope.
struct EnvelopeReport {
  bool pass = false;
  double worst_margin = 0.0;  ///< min over samples of w/envelope - (1 - slack)
  double worst_time = 0.0;
  int checked = 0;
  double t_detect = 0.0;  ///< threshold-crossing time of the trajectory
  double t_star = 0.0;
  std::string failure;    ///< first violation, empty on pass
};

/// Asserts w(t_i) >= (1 - slack) envelope(t_i) at every accepted step with
/// t_i < min(t_detect, t_star), and t_detect <= (1 + slack) t_star, where
/// w is the certified derivative observable (y for scalar certificates,
/// U' + V' for system ones). The trajectory must start at the certified
/// initial data; throws std::invalid_argument otherwise.
EnvelopeReport check_envelope(const Trajectory& traj, const odi::Certificate& cert,
                              double slack);

}  // namespace blowup::ode
