#include "blowup/ode/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace blowup::ode {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// 5th-order minus embedded 4th-order weights.
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

double max_norm(std::span<const double> v, int* argmax = nullptr) {
  double m = 0.0;
  int arg = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    const double a = std::abs(v[i]);
    if (a > m) {
      m = a;
      arg = i;
    }
  }
  if (argmax) *argmax = arg;
  return m;
}

double rms_scaled(std::span<const double> v, std::span<const double> scale) {
  double s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const double r = v[i] / scale[i];
    s += r * r;
  }
  return std::sqrt(s / static_cast<double>(v.size()));
}

// Classic automatic first-step heuristic based on the size of the initial
// derivative and an explicit Euler probe.
double initial_step(const Field& field, const State& y0, const State& f0,
                    const IntegratorOptions& opts) {
  const size_t n = y0.size();
  std::vector<double> scale(n);
  for (size_t i = 0; i < n; ++i)
    scale[i] = opts.abs_tol + opts.rel_tol * std::abs(y0[i]);
  const double d0 = rms_scaled(y0, scale);
  const double d1 = rms_scaled(f0, scale);
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min(h0, opts.horizon);

  State y1(n), f1(n);
  for (size_t i = 0; i < n; ++i) y1[i] = y0[i] + h0 * f0[i];
  field.eval(h0, y1, f1);
  double d2 = 0.0;
  if (all_finite(f1)) {
    std::vector<double> diff(n);
    for (size_t i = 0; i < n; ++i) diff[i] = f1[i] - f0[i];
    d2 = rms_scaled(diff, scale) / h0;
  }
  double h1;
  if (std::max(d1, d2) <= 1e-15)
    h1 = std::max(1e-6, h0 * 1e-3);
  else
    h1 = std::pow(0.01 / std::max(d1, d2), 0.2);
  return std::min({100.0 * h0, h1, opts.horizon});
}

}  // namespace

void IntegratorOptions::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("IntegratorOptions: tolerances must be positive");
  if (!(blowup_threshold > 0.0) || !(blowup_threshold <= 1e100))
    throw std::invalid_argument("IntegratorOptions: blowup_threshold out of range");
  if (max_steps <= 0)
    throw std::invalid_argument("IntegratorOptions: max_steps must be positive");
  if (!(min_step > 0.0))
    throw std::invalid_argument("IntegratorOptions: min_step must be positive");
  if (!(horizon > min_step))
    throw std::invalid_argument("IntegratorOptions: horizon must exceed min_step");
}

const char* termination_name(TerminationKind kind) {
  switch (kind) {
    case TerminationKind::BlownUp: return "blown_up";
    case TerminationKind::Survived: return "survived";
    case TerminationKind::StepCollapse: return "step_collapse";
  }
  return "unknown";
}

Trajectory integrate_ivp(const Field& field, State state0, const IntegratorOptions& opts) {
  opts.validate();
  if (static_cast<int>(state0.size()) != field.dimension)
    throw std::invalid_argument("integrate_ivp: state dimension mismatch");
  const size_t n = state0.size();

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(state0);
  traj.step_sizes.push_back(0.0);

  State y = std::move(state0);
  State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  State ytmp(n), ynew(n), yerr(n);
  std::vector<double> scale(n);

  double t = 0.0;
  field.eval(t, y, k1);
  if (!all_finite(k1))
    throw std::invalid_argument("integrate_ivp: field is not finite at the initial state");

  // Immediate threshold crossing at t = 0 is reported as the degenerate
  // blow-up record below.
  {
    int arg = 0;
    if (max_norm(y, &arg) >= opts.blowup_threshold) {
      traj.termination = {TerminationKind::BlownUp, 0.0, arg};
      return traj;
    }
  }

  double h = initial_step(field, y, k1, opts);
  h = std::max(h, opts.min_step);

  // PI controller constants (order-5 error estimate).
  constexpr double kSafety = 0.9;
  constexpr double kAlpha = 0.7 / 5.0;
  constexpr double kBeta = 0.4 / 5.0;
  double err_old = 1e-4;

  for (long long step = 0; step < opts.max_steps; ++step) {
    bool final_step = false;
    if (t + h >= opts.horizon) {
      h = opts.horizon - t;
      final_step = true;
    }
    if (h < opts.min_step && !final_step) {
      traj.termination = {TerminationKind::StepCollapse, t, -1};
      return traj;
    }
    if (final_step && h <= 0.0) {
      traj.termination = {TerminationKind::Survived, t, -1};
      return traj;
    }

    // Stage evaluations (k1 holds f(t, y) from FSAL).
    for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * kA21 * k1[i];
    field.eval(t + kC[1] * h, ytmp, k2);
    for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    field.eval(t + kC[2] * h, ytmp, k3);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    field.eval(t + kC[3] * h, ytmp, k4);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
    field.eval(t + kC[4] * h, ytmp, k5);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] +
                            kA65 * k5[i]);
    field.eval(t + h, ytmp, k6);
    for (size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] +
                            kB6 * k6[i]);
    field.eval(t + h, ynew, k7);
    for (size_t i = 0; i < n; ++i)
      yerr[i] = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                     kE6 * k6[i] + kE7 * k7[i]);

    double err;
    if (!all_finite(ynew) || !all_finite(k7)) {
      err = 1e10;  // force rejection
    } else {
      for (size_t i = 0; i < n; ++i)
        scale[i] = opts.abs_tol +
                   opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err = rms_scaled(yerr, scale);
    }

    if (err <= 1.0) {
      const double t_new = final_step ? opts.horizon : t + h;
      traj.times.push_back(t_new);
      traj.states.push_back(ynew);
      traj.step_sizes.push_back(h);
      t = t_new;
      y = ynew;
      std::swap(k1, k7);  // FSAL

      int arg = 0;
      if (max_norm(y, &arg) >= opts.blowup_threshold) {
        traj.termination = {TerminationKind::BlownUp, t, arg};
        return traj;
      }
      if (final_step) {
        traj.termination = {TerminationKind::Survived, t, -1};
        return traj;
      }
      double fac = kSafety * std::pow(std::max(err, 1e-16), -kAlpha) *
                   std::pow(err_old, kBeta);
      fac = std::clamp(fac, 0.2, 5.0);
      err_old = std::max(err, 1e-4);
      h *= fac;
    } else {
      double fac = err >= 1e10 ? 0.25 : kSafety * std::pow(err, -0.2);
      h *= std::clamp(fac, 0.1, 0.9);
      if (h < opts.min_step) {
        traj.termination = {TerminationKind::StepCollapse, t, -1};
        return traj;
      }
    }
  }
  traj.termination = {TerminationKind::StepCollapse, t, -1};
  return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  const size_t dim = traj.states.empty() ? 0 : traj.states.front().size();
  os << "t";
  for (size_t j = 0; j < dim; ++j) os << ",y" << j;
  os << ",h\n";
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (size_t i = 0; i < traj.times.size(); ++i) {
    put(traj.times[i]);
    for (size_t j = 0; j < dim; ++j) {
      os << ',';
      put(traj.states[i][j]);
    }
    os << ',';
    put(traj.step_sizes[i]);
    os << '\n';
  }
}

}  // namespace blowup::ode
