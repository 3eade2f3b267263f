#pragma once

#include <stdexcept>

namespace blowup::odi {

/// Coefficients of the scalar differential inequality v'' + a v >= b (v')^q.
///
/// After a PDE projection the same triple is reused with a = lambda and
/// b set to the growth constant of the projected nonlinearity.
struct OdiParams {
  double a;  ///< linear restoring coefficient, > 0
  double b;  ///< nonlinear gain, > 0
  double q;  ///< derivative power, > 1

  OdiParams(double a_, double b_, double q_) : a(a_), b(b_), q(q_) {
    if (!(a > 0.0)) throw std::invalid_argument("OdiParams: a must be positive");
    if (!(b > 0.0)) throw std::invalid_argument("OdiParams: b must be positive");
    if (!(q > 1.0)) throw std::invalid_argument("OdiParams: q must exceed 1");
  }
};

/// Coefficients of the coupled inequality pair
///   U'' + a U >= (V')^p,   V'' + a V >= (U')^q,   1 < p <= q.
struct SystemParams {
  double a;
  double p;
  double q;
  double alpha_sys;  ///< 1 + 1/(a p)
  double beta_sys;   ///< 1/(1 + a p) = (alpha_sys - 1)/alpha_sys

  SystemParams(double a_, double p_, double q_) : a(a_), p(p_), q(q_) {
    if (!(a > 0.0)) throw std::invalid_argument("SystemParams: a must be positive");
    if (!(p > 1.0)) throw std::invalid_argument("SystemParams: p must exceed 1");
    if (!(q >= p)) throw std::invalid_argument("SystemParams: q must be >= p");
    alpha_sys = 1.0 + 1.0 / (a * p);
    beta_sys = 1.0 / (1.0 + a * p);
  }
};

}  // namespace blowup::odi
