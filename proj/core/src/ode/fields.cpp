#include <cmath>
#include <sstream>

#include "blowup/ode/field.hpp"

namespace blowup::ode {

Field extremal_scalar_field(const odi::OdiParams& params) {
  const double a = params.a, b = params.b, q = params.q;
  std::ostringstream label;
  label << "scalar extremal a=" << a << " b=" << b << " q=" << q;
  return Field{
      2,
      [a, b, q](double, std::span<const double> y, std::span<double> dydt) {
        dydt[0] = y[1];
        dydt[1] = b * std::pow(std::abs(y[1]), q) - a * y[0];
      },
      label.str()};
}

Field extremal_system_field(const odi::SystemParams& sp) {
  const double a = sp.a, p = sp.p, q = sp.q;
  std::ostringstream label;
  label << "system extremal a=" << a << " p=" << p << " q=" << q;
  return Field{
      4,
      [a, p, q](double, std::span<const double> y, std::span<double> dydt) {
        // state (x, t, z, y) = (U, U', V, V')
        dydt[0] = y[1];
        dydt[1] = std::pow(std::abs(y[3]), p) - a * y[0];
        dydt[2] = y[3];
        dydt[3] = std::pow(std::abs(y[1]), q) - a * y[2];
      },
      label.str()};
}

}  // namespace blowup::ode
