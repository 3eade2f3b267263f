#pragma once

#include <span>
#include <string>
#include <vector>

#include "blowup/ode/field.hpp"
#include "blowup/spectral/quadrature.hpp"

namespace blowup::spectral {

/// Galerkin discretisations on (0, pi) with Dirichlet conditions: sine
/// eigenbasis sin(k x), eigenvalues k^2, first eigenfunction normalised to
/// unit integral, phi(x) = sin(x)/2, ||phi||_inf = 1/2.
inline constexpr double kPhiSup = 0.5;
inline constexpr double kLambda1 = 1.0;

enum class ProblemKind {
  SingleWave,           ///< u'' - u_xx = C |u_t|^q
  WaveSystem,           ///< u'' - u_xx = |v_t|^p, v'' - v_xx = |u_t|^q
  HyperbolicElliptic,   ///< u'' - u_xx = C |v_t|^q with -v_xx = u
  HyperbolicParabolic,  ///< u'' - u_xx = |v_t|^q with w_t = w_xx + beta w^p, w = u - v
};

const char* problem_name(ProblemKind kind);

struct SpectralConfig {
  int n_modes = 16;
  int n_quad = 64;      ///< requested minimum; must be >= 4 * n_modes
  double C = 1.0;       ///< growth constant (SingleWave, HyperbolicElliptic);
                        ///< C = 0 is the degenerate linear limit
  double q = 1.5;
  ProblemKind problem = ProblemKind::SingleWave;
  double p = 1.0;       ///< WaveSystem forcing power / parabolic reaction power
  double beta = 0.0;    ///< parabolic reaction coefficient
  double m = 1.0;       ///< parabolic diffusion exponent; the solver requires 1
  double horizon = 1.0;

  void validate() const;
};

/// Galerkin coefficients of one snapshot. u is the wave unknown; v_* hold
/// the second unknown where one exists (coupled problems; derived rather
/// than evolved for the elliptic and parabolic variants), w_pos the gap
/// field u - v of the parabolic variant.
struct ModalState {
  double time = 0.0;
  std::vector<double> u_pos, u_vel;
  std::vector<double> v_pos, v_vel;
  std::vector<double> w_pos;
};

struct Projection {
  double v;
  double v_prime;
};

/// First Fourier coefficients against phi, (pi/4) c_1 and (pi/4) d_1
/// (closed form; exact for the modal representation).
Projection project_eigen(const ModalState& state);

class WaveProblem {
 public:
  /// Initial data as sine coefficients (index k-1 holds mode k; shorter
  /// vectors are zero-padded). aux0/aux1 carry the second unknown's data:
  /// v0/v1 modes for WaveSystem, w0 modes (gap u0 - v0) for
  /// HyperbolicParabolic; unused otherwise. The parabolic gap must be
  /// nonnegative at every quadrature node.
  WaveProblem(SpectralConfig config, std::vector<double> u0_modes,
              std::vector<double> u1_modes, std::vector<double> aux0_modes = {},
              std::vector<double> aux1_modes = {});

  const SpectralConfig& config() const { return cfg_; }
  const QuadratureTable& quadrature() const { return quad_; }
  int state_dimension() const;

  ode::Field field() const;
  ode::State initial_state() const;

  /// Expands a flat integrator state into labelled modal data, deriving the
  /// second unknown where applicable (elliptic: coefficient division by
  /// k^2; parabolic: v = u - w with v_t from the gap equation).
  ModalState unpack(double t, std::span<const double> y) const;

  // Diagnostics at a snapshot.
  Projection project_u_quadrature(const ModalState& s) const;
  Projection project_v(const ModalState& s) const;  ///< second unknown, modal
  double ut_l1(const ModalState& s) const;
  double sum_l1(const ModalState& s) const;  ///< ||u_t + v_t||_L1 (WaveSystem)
  double jensen_residual(const ModalState& s) const;
  double tail_ratio(const ModalState& s) const;

  /// Samples a closed-form function at the quadrature nodes and returns its
  /// first n_modes sine coefficients.
  template <class F>
  std::vector<double> project_function(F&& f) const {
    std::vector<double> values(quad_.size());
    for (int j = 0; j < quad_.size(); ++j) values[j] = f(quad_.nodes[j]);
    return project_nodes(values);
  }

  std::vector<double> project_nodes(const std::vector<double>& values) const;

 private:
  void rhs(std::span<const double> y, std::span<double> dydt) const;
  void nodes_from_modes(std::span<const double> coeffs, std::vector<double>& out) const;
  std::vector<double> parabolic_gap_rate(std::span<const double> w_pos) const;

  SpectralConfig cfg_;
  QuadratureTable quad_;
  std::vector<double> sin_table_;  ///< sin(k x_j), row-major [k-1][j]
  std::vector<double> phi_;        ///< sin(x_j)/2
  std::vector<double> lambda_;     ///< k^2
  ode::State initial_;
};

}  // namespace blowup::spectral
