#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "blowup/odi/params.hpp"

namespace blowup::ode {

using State = std::vector<double>;

/// A first-order vector field y' = f(t, y). All fields in this project are
/// autonomous; the time argument is kept for generality.
struct Field {
  int dimension = 0;
  std::function<void(double t, std::span<const double> y, std::span<double> dydt)> eval;
  std::string label;
};

/// Planar equality-case field of the scalar inequality:
///   (x, y) -> (y, b |y|^q - a x).
/// |y|^q rather than y^q keeps the field total below the x-axis, matching
/// the PDE nonlinearity |u_t|^q.
Field extremal_scalar_field(const odi::OdiParams& params);

/// Four-dimensional equality-case field of the coupled system over the
/// state (x, t, z, y) = (U, U', V, V'):
///   (x', t', z', y') = (t, |y|^p - a x, y, |t|^q - a z).
Field extremal_system_field(const odi::SystemParams& sp);

}  // namespace blowup::ode
