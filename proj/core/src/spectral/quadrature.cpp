#include "blowup/spectral/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blowup::spectral {

namespace {

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr double kNodes[4] = {0.18343464249564980, 0.52553240991632899,
                              0.79666647741362674, 0.96028985649753623};
constexpr double kWeights[4] = {0.36268378337836198, 0.31370664587788729,
                                0.22238103445337447, 0.10122853629037626};

}  // namespace

QuadratureTable composite_gauss_legendre(int min_points) {
  if (min_points < 1)
    throw std::invalid_argument("composite_gauss_legendre: min_points must be positive");
  const int panels = (min_points + 7) / 8;
  const double width = std::numbers::pi / panels;
  QuadratureTable table;
  table.nodes.reserve(8 * panels);
  table.weights.reserve(8 * panels);
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    const double half = 0.5 * width;
    for (int i = 3; i >= 0; --i) {
      table.nodes.push_back(mid - half * kNodes[i]);
      table.weights.push_back(half * kWeights[i]);
    }
    for (int i = 0; i < 4; ++i) {
      table.nodes.push_back(mid + half * kNodes[i]);
      table.weights.push_back(half * kWeights[i]);
    }
  }
  return table;
}

}  // namespace blowup::spectral
