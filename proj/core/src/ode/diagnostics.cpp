#include "blowup/ode/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace blowup::ode {

namespace {

struct LinearFit {
  double intercept;
  double slope;
  double rms;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double sse = 0;
  for (size_t i = 0; i < n; ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    sse += r * r;
  }
  return {intercept, slope, std::sqrt(sse / n)};
}

// RMS residual of regressing ln y on ln(T - t); also reports the slope.
double loglog_residual(const std::vector<double>& t, const std::vector<double>& ln_y,
                       double T, double* slope_out) {
  std::vector<double> lx(t.size());
  for (size_t i = 0; i < t.size(); ++i) lx[i] = std::log(T - t[i]);
  const LinearFit fit = fit_line(lx, ln_y);
  if (slope_out) *slope_out = fit.slope;
  return fit.rms;
}

}  // namespace

BlowupFit detect_blowup(const Trajectory& traj, const IntegratorOptions& opts,
                        std::optional<double> q_power) {
  if (traj.termination.kind == TerminationKind::Survived)
    throw std::invalid_argument(
        "detect_blowup: trajectory survived the horizon; nothing to fit");

  int comp = traj.termination.component;
  if (comp < 0) {
    double m = -1.0;
    const State& last = traj.last_state();
    for (int i = 0; i < static_cast<int>(last.size()); ++i)
      if (std::abs(last[i]) > m) {
        m = std::abs(last[i]);
        comp = i;
      }
  }

  const double cutoff = 0.01 * opts.blowup_threshold;
  std::vector<double> ts, ys;
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const double v = std::abs(traj.states[i][comp]);
    if (v >= cutoff) {
      ts.push_back(traj.times[i]);
      ys.push_back(v);
    }
  }
  if (ts.size() < 8)
    throw std::runtime_error("detect_blowup: insufficient tail data (need 8 samples above "
                             "0.01 * blowup_threshold)");
  // Keep only the closest samples: the power law is asymptotic.
  constexpr size_t kMaxTail = 40;
  if (ts.size() > kMaxTail) {
    ts.erase(ts.begin(), ts.end() - kMaxTail);
    ys.erase(ys.begin(), ys.end() - kMaxTail);
  }
  const double t_last = ts.back();
  const double span = t_last - ts.front();
  std::vector<double> ln_y(ys.size());
  for (size_t i = 0; i < ys.size(); ++i) ln_y[i] = std::log(ys[i]);

  // Free fit: golden-section search of the pole offset delta = T - t_last
  // on a log grid, minimising the log-log regression residual.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::log(1e-6 * span), hi = std::log(30.0 * span);
  double u1 = hi - gr * (hi - lo), u2 = lo + gr * (hi - lo);
  auto sse = [&](double u) {
    return loglog_residual(ts, ln_y, t_last + std::exp(u), nullptr);
  };
  double f1 = sse(u1), f2 = sse(u2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      hi = u2;
      u2 = u1;
      f2 = f1;
      u1 = hi - gr * (hi - lo);
      f1 = sse(u1);
    } else {
      lo = u1;
      u1 = u2;
      f1 = f2;
      u2 = lo + gr * (hi - lo);
      f2 = sse(u2);
    }
  }
  const double delta = std::exp(0.5 * (lo + hi));
  double slope = 0.0;
  const double residual = loglog_residual(ts, ln_y, t_last + delta, &slope);
  const double exponent = -slope;
  double t_est = t_last + delta;

  if (q_power) {
    // With gamma = 1/(q-1) pinned, z = y^{1-q} decays linearly to zero at T.
    const double q = *q_power;
    if (!(q > 1.0))
      throw std::invalid_argument("detect_blowup: q_power must exceed 1");
    std::vector<double> z(ys.size());
    for (size_t i = 0; i < ys.size(); ++i) z[i] = std::pow(ys[i], 1.0 - q);
    const LinearFit fit = fit_line(ts, z);
    if (fit.slope < 0.0) {
      const double T_fixed = -fit.intercept / fit.slope;
      if (T_fixed > t_last) t_est = T_fixed;
    }
  }
  return {t_est, exponent, residual, static_cast<int>(ts.size())};
}

namespace {

std::vector<double> sample_points(int n_samples, double lo, double hi) {
  if (n_samples < 1)
    throw std::invalid_argument("boundary_inwardness: n_samples must be >= 1");
  if (!(hi >= lo)) throw std::invalid_argument("boundary_inwardness: bad range");
  std::vector<double> xs(n_samples);
  if (n_samples == 1) {
    xs[0] = lo;
    return xs;
  }
  for (int i = 0; i < n_samples; ++i)
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (n_samples - 1);
  return xs;
}

}  // namespace

InwardnessReport boundary_inwardness(const odi::OdiParams& params,
                                     const odi::SubQuadraticRegion& region, int n_samples,
                                     double x_lo, double x_hi) {
  const auto& c = region.constants;
  const double a = params.a, b = params.b, q = params.q;
  InwardnessReport rep{std::numeric_limits<double>::infinity(), x_lo, 0, 0};
  for (double x : sample_points(n_samples, x_lo, x_hi)) {
    const double y = boundary_F(c, params, x);
    const double P = y;
    const double Q = b * std::pow(y, q) - a * x;
    double inward;
    if (x <= c.x1 || (x >= 0.0 && x <= c.x2)) {
      inward = Q;  // flat pieces, inward normal (0, 1)
    } else if (x < 0.0) {
      // Rising arc parametrised by y (the slope in x per unit y stays
      // finite even where F' diverges at the left corner).
      const double xp = b * q * std::pow(y, q - 1.0) / (2.0 * a);
      inward = (-P + xp * Q) / std::hypot(1.0, xp);
    } else {
      const double fp = 2.0 * a / (b * q) * std::pow(y, 1.0 - q);
      inward = (-fp * P + Q) / std::hypot(fp, 1.0);
    }
    ++rep.samples;
    if (inward < rep.min_inward) {
      rep.min_inward = inward;
      rep.argmin_x = x;
    }
  }
  return rep;
}

InwardnessReport boundary_inwardness(const odi::OdiParams& params,
                                     const odi::SuperQuadraticRegion& region, int n_samples,
                                     double x_lo, double x_hi) {
  const double a = params.a, b = params.b, q = params.q;
  InwardnessReport rep{std::numeric_limits<double>::infinity(), x_lo, 0, 0};
  for (double x : sample_points(n_samples, x_lo, x_hi)) {
    const double y = boundary_F2(params, region.epsilon, region.A, x);
    const double fp = boundary_F2_derivative(params, region.epsilon, region.A, x);
    const double Q = b * std::pow(y, q) - a * x;
    const double inward = (-fp * y + Q) / std::hypot(fp, 1.0);
    ++rep.samples;
    if (inward < rep.min_inward) {
      rep.min_inward = inward;
      rep.argmin_x = x;
    }
  }
  return rep;
}

InwardnessReport boundary_inwardness(const odi::SystemRegion& region, int n_samples,
                                     double x_lo, double x_hi) {
  const auto& sp = region.params;
  const double a = sp.a, p = sp.p, q = sp.q;
  // Both factor curves share the gain a + 1/p = alpha a.
  const double alpha_a = sp.alpha_sys * a;
  InwardnessReport rep{std::numeric_limits<double>::infinity(), x_lo, 0, 0};
  for (double x : sample_points(n_samples, x_lo, x_hi)) {
    const double z = x;  // diagonal edge of the product boundary
    const double y = x > 0.0 ? std::pow(alpha_a * x, 1.0 / p) : 0.0;  // V' on face 1
    const double t = z > 0.0 ? std::pow(alpha_a * z, 1.0 / q) : 0.0;  // U' on face 2
    if (y <= 0.0 || t <= 0.0 ||
        std::pow(t, q - 1.0) * std::pow(y, p - 1.0) < alpha_a * alpha_a) {
      ++rep.skipped;  // unreachable from certified data
      continue;
    }
    // Face y = f_p(x): exit rate y' - f_p'(x) x' in the (x, y) plane.
    const double fpx = alpha_a / (p * std::pow(y, p - 1.0));
    const double in1 = (std::pow(t, q) - a * z - fpx * t) / std::hypot(fpx, 1.0);
    // Face t = f_q(z): exit rate t' - f_q'(z) z' in the (z, t) plane.
    const double fqz = alpha_a / (q * std::pow(t, q - 1.0));
    const double in2 = (std::pow(y, p) - a * x - fqz * y) / std::hypot(fqz, 1.0);
    const double inward = std::min(in1, in2);
    ++rep.samples;
    if (inward < rep.min_inward) {
      rep.min_inward = inward;
      rep.argmin_x = x;
    }
  }
  if (rep.samples == 0)
    throw std::invalid_argument(
        "boundary_inwardness: no edge sample satisfies the reachability bound; widen the range");
  return rep;
}

InwardnessReport boundary_inwardness(const odi::RegionKind& kind,
                                     const std::optional<odi::OdiParams>& params,
                                     int n_samples, double x_lo, double x_hi) {
  struct Visitor {
    const std::optional<odi::OdiParams>& params;
    int n;
    double lo, hi;

    InwardnessReport operator()(const odi::SubQuadraticRegion& r) const {
      if (!params)
        throw std::invalid_argument("boundary_inwardness: scalar region needs OdiParams");
      return boundary_inwardness(*params, r, n, lo, hi);
    }
    InwardnessReport operator()(const odi::SuperQuadraticRegion& r) const {
      if (!params)
        throw std::invalid_argument("boundary_inwardness: scalar region needs OdiParams");
      return boundary_inwardness(*params, r, n, lo, hi);
    }
    InwardnessReport operator()(const odi::SystemRegion& r) const {
      return boundary_inwardness(r, n, lo, hi);
    }
    InwardnessReport operator()(const odi::LevineRegion&) const {
      throw std::invalid_argument(
          "boundary_inwardness: the comparison wedge has no entering-field boundary");
    }
  };
  return std::visit(Visitor{params, n_samples, x_lo, x_hi}, kind);
}

EnvelopeReport check_envelope(const Trajectory& traj, const odi::Certificate& cert,
                              double slack) {
  if (!(slack >= 0.0 && slack <= 0.1))
    throw std::invalid_argument("check_envelope: slack must lie in [0, 0.1]");
  if (traj.states.empty()) throw std::invalid_argument("check_envelope: empty trajectory");

  const bool system = cert.provenance == odi::Provenance::System;
  const size_t dim = traj.states.front().size();
  if ((system && dim != 4) || (!system && dim != 2))
    throw std::invalid_argument("check_envelope: trajectory dimension does not match "
                                "the certificate provenance");
  auto observable = [&](const State& s) {
    return system ? s[1] + s[3] : s[1];
  };
  auto position = [&](const State& s) { return system ? s[0] + s[2] : s[0]; };

  const double w0 = observable(traj.states.front());
  const double x0 = position(traj.states.front());
  const double tol0 = 1e-9 * std::max({1.0, std::abs(cert.v0), std::abs(cert.v1)});
  if (std::abs(w0 - cert.v1) > tol0 || std::abs(x0 - cert.v0) > tol0)
    throw std::invalid_argument(
        "check_envelope: trajectory does not start at the certified initial data");

  EnvelopeReport rep;
  rep.t_star = cert.t_star;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  if (traj.termination.kind != TerminationKind::BlownUp) {
    std::ostringstream os;
    os << "no blow-up detected (termination: "
       << termination_name(traj.termination.kind) << " at t=" << traj.termination.time
       << ")";
    rep.failure = os.str();
    return rep;
  }
  rep.t_detect = traj.termination.time;
  if (!(rep.t_detect <= (1.0 + slack) * cert.t_star)) {
    std::ostringstream os;
    os << "blow-up detected at t=" << rep.t_detect << " beyond (1+slack) t_star="
       << (1.0 + slack) * cert.t_star;
    rep.failure = os.str();
    return rep;
  }

  const double t_stop = std::min(rep.t_detect, cert.t_star);
  constexpr double kUlpSlack = 1e-13;  // roundoff allowance at the t = 0 anchor
  bool ok = true;
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (!(t < t_stop)) break;
    const double env = rate_envelope(cert, t);
    const double w = observable(traj.states[i]);
    const double margin = w / env - (1.0 - slack);
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_time = t;
    }
    ++rep.checked;
    if (ok && w < (1.0 - slack) * env * (1.0 - kUlpSlack)) {
      std::ostringstream os;
      os << "envelope violated at t=" << t << ": observable " << w << " < (1-slack) "
         << env;
      rep.failure = os.str();
      ok = false;
    }
  }
  rep.pass = ok;
  return rep;
}

}  // namespace blowup::ode
