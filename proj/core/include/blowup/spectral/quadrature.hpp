#pragma once

#include <vector>

namespace blowup::spectral {

/// Quadrature nodes and weights on (0, pi).
struct QuadratureTable {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (int j = 0; j < size(); ++j) s += weights[j] * f(nodes[j]);
    return s;
  }
};

/// Composite Gauss-Legendre rule with 8-point panels; the panel count is
/// the smallest giving at least min_points nodes.
QuadratureTable composite_gauss_legendre(int min_points);

}  // namespace blowup::spectral
