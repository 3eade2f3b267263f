#include "blowup/odi/region.hpp"

#include <cmath>
#include <stdexcept>

namespace blowup::odi {

namespace {

void require_sub_quadratic(const OdiParams& params) {
  if (params.q > 2.0)
    throw std::domain_error("sub-quadratic branch requires q <= 2 (got q > 2)");
}

void require_super_quadratic(const OdiParams& params) {
  if (!(params.q > 2.0))
    throw std::domain_error("super-quadratic branch requires q > 2");
}

}  // namespace

SubQuadraticConstants sub_quadratic_constants(const OdiParams& params) {
  require_sub_quadratic(params);
  const double a = params.a, b = params.b, q = params.q;
  // OdiParams guarantees q > 1, so the exponent denominators are nonzero.
  const double r = 4.0 * a / (b * b * q);
  SubQuadraticConstants c;
  c.v1_threshold = std::pow(r, 1.0 / (2.0 * q - 2.0));
  c.plateau = c.v1_threshold;
  c.alpha = (2.0 * a / (b * q)) * std::pow(r, (2.0 - q) / (2.0 * q - 2.0));
  c.x1 = -c.alpha / a;
  c.x2 = (b / (2.0 * a)) * std::pow(r, q / (2.0 * q - 2.0));
  return c;
}

double boundary_F(const SubQuadraticConstants& consts, const OdiParams& params, double x) {
  const double a = params.a, b = params.b, q = params.q;
  if (x <= consts.x1) return 0.0;
  if (x < 0.0) return std::pow(2.0 * (a * x + consts.alpha) / b, 1.0 / q);
  if (x <= consts.x2) return consts.plateau;
  return std::pow(2.0 * a * x / b, 1.0 / q);
}

bool in_region_sub_quadratic(const OdiParams& params, double v0, double v1) {
  const SubQuadraticConstants consts = sub_quadratic_constants(params);
  return v1 > 0.0 && v1 > boundary_F(consts, params, v0);
}

double epsilon_polynomial(const OdiParams& params, double v0, double v1, double eps) {
  const double a = params.a, b = params.b, q = params.q;
  return eps * b * q * std::pow(v1, q - 2.0) * (eps * b * std::pow(v1, q) - a * v0) - a;
}

bool in_region_super_quadratic(const OdiParams& params, double v0, double v1) {
  require_super_quadratic(params);
  if (!(v1 > 0.0)) return false;
  return epsilon_polynomial(params, v0, v1, 1.0) > 0.0;
}

double epsilon_min(const OdiParams& params, double v0, double v1) {
  require_super_quadratic(params);
  if (!(v1 > 0.0) || !(epsilon_polynomial(params, v0, v1, 1.0) > 0.0))
    throw std::domain_error("epsilon_min: admissibility condition violated (f(1) <= 0)");
  const double a = params.a, b = params.b, q = params.q;
  // f(eps) = A2 eps^2 + B1 eps + C0 with A2 > 0 and C0 = -a < 0, so the
  // roots have opposite signs; f(0) < 0 < f(1) pins the positive one to
  // (0, 1).
  const double A2 = b * b * q * std::pow(v1, 2.0 * q - 2.0);
  const double B1 = -a * b * q * std::pow(v1, q - 2.0) * v0;
  const double C0 = -a;
  const double disc = std::sqrt(B1 * B1 - 4.0 * A2 * C0);
  if (B1 <= 0.0) return (-B1 + disc) / (2.0 * A2);
  return -2.0 * C0 / (B1 + disc);  // cancellation-free form for B1 > 0
}

double boundary_F2(const OdiParams& params, double epsilon, double A, double x) {
  const double arg = params.a * x + A;
  if (!(arg > 0.0))
    throw std::domain_error("boundary_F2: a x + A must be positive");
  return std::pow(arg / (epsilon * params.b), 1.0 / params.q);
}

double boundary_F2_derivative(const OdiParams& params, double epsilon, double A, double x) {
  const double y = boundary_F2(params, epsilon, A, x);
  return params.a / (epsilon * params.b * params.q * std::pow(y, params.q - 1.0));
}

double boundary_fp(double a, double p, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("boundary_fp: a must be positive");
  if (!(p > 1.0)) throw std::invalid_argument("boundary_fp: p must exceed 1");
  if (x <= 0.0) return 0.0;
  const double alpha = 1.0 + 1.0 / (a * p);
  return std::pow(alpha * a * x, 1.0 / p);
}

bool in_region_system(const SystemParams& sp, double U0, double V0, double U1, double V1) {
  const double gain = sp.a + 1.0 / sp.p;
  return U1 > 1.0 && V1 > 1.0 && U0 * V0 >= U1 * V1 &&
         std::pow(U1, sp.q) >= gain * V0 && std::pow(V1, sp.p) >= gain * U0;
}

double levine_s0(double lambda, double C, double q) {
  if (!(lambda > 0.0)) throw std::invalid_argument("levine_s0: lambda must be positive");
  if (!(C > 0.0)) throw std::invalid_argument("levine_s0: C must be positive");
  if (!(q > 1.0)) throw std::invalid_argument("levine_s0: q must exceed 1");
  return std::pow((lambda + 1.0) / C, 1.0 / (q - 1.0));
}

bool levine_region(double lambda, double C, double q, double v0, double v1) {
  const double s0 = levine_s0(lambda, C, q);
  return v1 > v0 && v0 > s0;
}

const char* region_name(const RegionKind& kind) {
  struct Visitor {
    const char* operator()(const SubQuadraticRegion&) const { return "sub_quadratic"; }
    const char* operator()(const SuperQuadraticRegion&) const { return "super_quadratic"; }
    const char* operator()(const SystemRegion&) const { return "system"; }
    const char* operator()(const LevineRegion&) const { return "levine"; }
  };
  return std::visit(Visitor{}, kind);
}

}  // namespace blowup::odi
