#pragma once

#include <variant>

#include "blowup/odi/params.hpp"

namespace blowup::odi {

/// Closed-form constants of the admissible region for 1 < q <= 2.
///
/// The region is the open set above a four-piece curve F: zero left of x1,
/// a concave rise on [x1, 0], a plateau on [0, x2] and power growth beyond.
struct SubQuadraticConstants {
  double alpha;         ///< (2a/(bq)) (4a/(b^2 q))^{(2-q)/(2q-2)}
  double v1_threshold;  ///< velocity cutoff (4a/(b^2 q))^{1/(2q-2)}
  double x1;            ///< -alpha/a, left end of the rise
  double x2;            ///< (b/2a) (4a/(b^2 q))^{q/(2q-2)}, right end of the plateau
  double plateau;       ///< plateau height, equals v1_threshold
};

/// Computes the region constants. Requires 1 < q <= 2.
SubQuadraticConstants sub_quadratic_constants(const OdiParams& params);

/// The boundary curve for the sub-quadratic branch, defined on all reals
/// and continuous everywhere.
double boundary_F(const SubQuadraticConstants& consts, const OdiParams& params, double x);

/// Open-region membership test for 1 < q <= 2: v1 > 0 and v1 > F(v0).
/// Boundary points are rejected (exact binary64 comparison, no fuzz).
bool in_region_sub_quadratic(const OdiParams& params, double v0, double v1);

/// Quadratic form whose positivity at eps characterises admissible slack:
///   f(eps) = eps b q v1^{q-2} (eps b v1^q - a v0) - a.
double epsilon_polynomial(const OdiParams& params, double v0, double v1, double eps);

/// Smallest admissible eps in (0, 1) for the q > 2 branch: the unique
/// positive root of the quadratic f. Requires q > 2 and f(1) > 0; throws
/// std::domain_error otherwise.
double epsilon_min(const OdiParams& params, double v0, double v1);

/// Membership test for q > 2: v1 > 0 and f(1) > 0 (strict).
bool in_region_super_quadratic(const OdiParams& params, double v0, double v1);

/// Boundary curve of the q > 2 branch, F2(x) = ((a x + A)/(eps b))^{1/q}.
/// With A = eps b v1^q - a v0 it passes through (v0, v1) and satisfies
/// F2'(x) = a / (eps b q F2(x)^{q-1}). Throws std::domain_error when
/// a x + A <= 0.
double boundary_F2(const OdiParams& params, double epsilon, double A, double x);

/// Closed-form slope of F2 (same domain restriction).
double boundary_F2_derivative(const OdiParams& params, double epsilon, double A, double x);

/// One factor of the product region boundary for the coupled system:
/// f_p(x) = H(x) (alpha a x)^{1/p} with alpha = 1 + 1/(a p) and H the
/// Heaviside step (H(0) := 1; immaterial, the value is 0 there anyway).
double boundary_fp(double a, double p, double x);

/// Membership test for the coupled system (strict velocity bounds, the
/// product and growth bounds non-strict).
bool in_region_system(const SystemParams& sp, double U0, double V0, double U1, double V1);

/// Threshold s0 = ((lambda+1)/C)^{1/(q-1)} of the comparison wedge.
double levine_s0(double lambda, double C, double q);

/// Comparison wedge membership: v1 > v0 > s0.
bool levine_region(double lambda, double C, double q, double v0, double v1);

// ---------------------------------------------------------------------------
// Region tags carried by certificates.

struct SubQuadraticRegion {
  SubQuadraticConstants constants;
};

struct SuperQuadraticRegion {
  double epsilon;  ///< admissible slack used by the certificate
  double A;        ///< eps b v1^q - a v0, positive for certified data
};

struct SystemRegion {
  SystemParams params;
};

struct LevineRegion {
  double s0;
};

using RegionKind =
    std::variant<SubQuadraticRegion, SuperQuadraticRegion, SystemRegion, LevineRegion>;

const char* region_name(const RegionKind& kind);

}  // namespace blowup::odi
