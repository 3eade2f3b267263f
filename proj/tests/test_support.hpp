#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "blowup/odi/certificate.hpp"
#include "blowup/odi/region.hpp"
#include "blowup/util/random.hpp"

namespace testsupport {

/// Draws a certified initial point for either branch, with a modest margin
/// above the boundary so that integration starts safely inside.
inline std::pair<double, double> sample_certified(const blowup::odi::OdiParams& p,
                                                  blowup::util::Rng& rng) {
  using namespace blowup;
  if (p.q <= 2.0) {
    const auto c = odi::sub_quadratic_constants(p);
    const double v0 = rng.uniform(c.x1 - 2.0, c.x2 + 3.0);
    const double v1 = odi::boundary_F(c, p, v0) + rng.uniform(0.05, 2.0);
    return {v0, v1};
  }
  for (;;) {
    const double v1 = rng.uniform(0.5, 3.0);
    // f(1) > 0 is equivalent to a v0 < b v1^q - a / (b q v1^{q-2}).
    const double bound =
        (p.b * std::pow(v1, p.q) - p.a / (p.b * p.q * std::pow(v1, p.q - 2.0))) / p.a;
    const double v0 = bound - rng.uniform(0.05, 3.0);
    if (odi::in_region_super_quadratic(p, v0, v1)) return {v0, v1};
  }
}

}  // namespace testsupport
