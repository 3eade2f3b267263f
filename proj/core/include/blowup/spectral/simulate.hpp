#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "blowup/ode/integrator.hpp"
#include "blowup/odi/certificate.hpp"
#include "blowup/spectral/problem.hpp"

namespace blowup::spectral {

/// Snapshot record of a spectral run: every accepted integrator step with
/// its projections, L1 norms, convexity (Jensen) residual and spectral
/// tail ratio. The truncation is trusted up to the first snapshot whose
/// tail ratio exceeds 1e-3.
struct WaveTrajectory {
  SpectralConfig config;
  std::vector<double> times;
  std::vector<ModalState> snapshots;
  std::vector<double> v, v_prime;        ///< projection of u (U, U')
  std::vector<double> v2, v2_prime;      ///< projection of the second unknown, if any
  std::vector<double> ut_l1;
  std::vector<double> sum_l1;            ///< WaveSystem: ||u_t + v_t||_L1
  std::vector<double> jensen;
  std::vector<double> tail;
  ode::Termination termination{ode::TerminationKind::Survived, 0.0, -1};
  bool resolution_loss = false;
  double resolution_loss_time = 0.0;  ///< first untrusted snapshot time
  double last_trusted_time = 0.0;

  bool has_second_unknown() const { return !v2.empty(); }

  /// Earliest blow-up evidence: threshold crossing or resolution loss,
  /// whichever comes first; empty for a clean survival.
  std::optional<double> indicator_time() const;
};

inline constexpr double kTailTrustLimit = 1e-3;

WaveTrajectory simulate_wave(const WaveProblem& problem, const ode::IntegratorOptions& opts);

/// CSV export: t, v, v_prime, ut_l1, jensen, tail (plus U2, U2_prime and
/// sum_l1 columns for coupled problems).
void write_wave_csv(std::ostream& os, const WaveTrajectory& wt);

/// Per-snapshot modal coefficient dump (JSON array of snapshot objects).
void write_modal_json(std::ostream& os, const WaveTrajectory& wt);

/// Verification of a PDE certificate against a spectral run at every
/// trusted snapshot: (i) the projected derivative dominates the envelope,
/// (ii) the L1 norm dominates l1_factor * envelope, (iii) the convexity
/// residual stays above -jensen_tol. For the elliptic variant the
/// reduction identity lambda V' = U' is checked as well.
struct TheoremReport {
  bool pass = false;
  int checked = 0;
  double worst_projection_margin = 0.0;
  double worst_l1_margin = 0.0;
  double min_jensen = 0.0;
  double identity_error = 0.0;  ///< max |lambda V' - U'| (elliptic only)
  double t_star = 0.0;
  double last_checked_time = 0.0;
  std::string failure;
};

TheoremReport verify_theorem(const WaveProblem& problem, const WaveTrajectory& wt,
                             const odi::Certificate& cert, double slack,
                             double jensen_tol = 1e-8);

}  // namespace blowup::spectral
