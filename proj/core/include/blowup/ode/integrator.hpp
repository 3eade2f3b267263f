#pragma once

#include <iosfwd>
#include <vector>

#include "blowup/ode/field.hpp"

namespace blowup::ode {

struct IntegratorOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double blowup_threshold = 1e8;  ///< max-norm of the state
  long long max_steps = 10'000'000;
  double min_step = 1e-14;
  double horizon = 1.0;

  void validate() const;  ///< throws std::invalid_argument on bad settings
};

enum class TerminationKind {
  BlownUp,      ///< max-norm crossed blowup_threshold at time `time`
  Survived,     ///< reached the horizon
  StepCollapse  ///< controller demanded a step below min_step (or ran out of steps)
};

struct Termination {
  TerminationKind kind;
  double time;
  int component = -1;  ///< blown-up component for BlownUp
};

const char* termination_name(TerminationKind kind);

/// Dense record of every accepted step.
struct Trajectory {
  std::vector<double> times;        ///< strictly increasing, starts at 0
  std::vector<State> states;
  std::vector<double> step_sizes;   ///< accepted step producing each row; 0 for row 0
  Termination termination;

  double last_time() const { return times.back(); }
  const State& last_state() const { return states.back(); }
};

/// Adaptive embedded Runge-Kutta 5(4) integration (Dormand-Prince pair)
/// with PI step-size control. Terminates on threshold crossing, horizon, or
/// step collapse; every accepted step is retained.
Trajectory integrate_ivp(const Field& field, State state0, const IntegratorOptions& opts);

/// CSV export: header `t,y0,...,y{d-1},h`, 17-significant-digit floats, LF
/// line endings.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace blowup::ode
