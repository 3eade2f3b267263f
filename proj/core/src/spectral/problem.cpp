#include "blowup/spectral/problem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blowup::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

double signed_pow(double s, double p) {
  if (s == 0.0) return 0.0;
  return s > 0.0 ? std::pow(s, p) : -std::pow(-s, p);
}

std::vector<double> padded(std::vector<double> modes, int n) {
  if (static_cast<int>(modes.size()) > n)
    throw std::invalid_argument("initial data has more modes than the truncation");
  modes.resize(n, 0.0);
  return modes;
}

}  // namespace

const char* problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::SingleWave: return "single_wave";
    case ProblemKind::WaveSystem: return "wave_system";
    case ProblemKind::HyperbolicElliptic: return "hyperbolic_elliptic";
    case ProblemKind::HyperbolicParabolic: return "hyperbolic_parabolic";
  }
  return "unknown";
}

void SpectralConfig::validate() const {
  if (n_modes < 1) throw std::invalid_argument("SpectralConfig: n_modes must be >= 1");
  if (n_quad < 4 * n_modes)
    throw std::invalid_argument("SpectralConfig: n_quad must be >= 4 * n_modes");
  if (!(C >= 0.0)) throw std::invalid_argument("SpectralConfig: C must be nonnegative");
  if (!(q > 1.0)) throw std::invalid_argument("SpectralConfig: q must exceed 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("SpectralConfig: horizon must be positive");
  if (problem == ProblemKind::WaveSystem && !(p > 1.0))
    throw std::invalid_argument("SpectralConfig: wave_system requires p > 1");
  if (problem == ProblemKind::HyperbolicParabolic && !(p <= 1.0))
    throw std::invalid_argument("SpectralConfig: parabolic reaction power p must be <= 1");
}

Projection project_eigen(const ModalState& state) {
  const double c1 = state.u_pos.empty() ? 0.0 : state.u_pos.front();
  const double d1 = state.u_vel.empty() ? 0.0 : state.u_vel.front();
  return {kPi / 4.0 * c1, kPi / 4.0 * d1};
}

WaveProblem::WaveProblem(SpectralConfig config, std::vector<double> u0_modes,
                         std::vector<double> u1_modes, std::vector<double> aux0_modes,
                         std::vector<double> aux1_modes)
    : cfg_(config), quad_(composite_gauss_legendre(config.n_quad)) {
  cfg_.validate();
  if (cfg_.problem == ProblemKind::HyperbolicParabolic && cfg_.m != 1.0)
    throw std::invalid_argument("WaveProblem: parabolic variant is implemented for m = 1 only");

  const int n = cfg_.n_modes;
  const int nq = quad_.size();
  sin_table_.resize(static_cast<size_t>(n) * nq);
  for (int k = 1; k <= n; ++k)
    for (int j = 0; j < nq; ++j)
      sin_table_[(k - 1) * static_cast<size_t>(nq) + j] = std::sin(k * quad_.nodes[j]);
  phi_.resize(nq);
  for (int j = 0; j < nq; ++j) phi_[j] = 0.5 * std::sin(quad_.nodes[j]);
  lambda_.resize(n);
  for (int k = 1; k <= n; ++k) lambda_[k - 1] = static_cast<double>(k) * k;

  const auto u0 = padded(std::move(u0_modes), n);
  const auto u1 = padded(std::move(u1_modes), n);
  switch (cfg_.problem) {
    case ProblemKind::SingleWave:
    case ProblemKind::HyperbolicElliptic: {
      initial_.reserve(2 * n);
      initial_.insert(initial_.end(), u0.begin(), u0.end());
      initial_.insert(initial_.end(), u1.begin(), u1.end());
      break;
    }
    case ProblemKind::WaveSystem: {
      const auto v0 = padded(std::move(aux0_modes), n);
      const auto v1 = padded(std::move(aux1_modes), n);
      initial_.reserve(4 * n);
      initial_.insert(initial_.end(), u0.begin(), u0.end());
      initial_.insert(initial_.end(), u1.begin(), u1.end());
      initial_.insert(initial_.end(), v0.begin(), v0.end());
      initial_.insert(initial_.end(), v1.begin(), v1.end());
      break;
    }
    case ProblemKind::HyperbolicParabolic: {
      const auto w0 = padded(std::move(aux0_modes), n);
      std::vector<double> w_nodes;
      nodes_from_modes(w0, w_nodes);
      for (double w : w_nodes)
        if (w < 0.0)
          throw std::invalid_argument(
              "WaveProblem: parabolic gap u0 - v0 must be nonnegative at every node");
      initial_.reserve(3 * n);
      initial_.insert(initial_.end(), u0.begin(), u0.end());
      initial_.insert(initial_.end(), u1.begin(), u1.end());
      initial_.insert(initial_.end(), w0.begin(), w0.end());
      break;
    }
  }
}

int WaveProblem::state_dimension() const {
  switch (cfg_.problem) {
    case ProblemKind::SingleWave:
    case ProblemKind::HyperbolicElliptic: return 2 * cfg_.n_modes;
    case ProblemKind::WaveSystem: return 4 * cfg_.n_modes;
    case ProblemKind::HyperbolicParabolic: return 3 * cfg_.n_modes;
  }
  return 0;
}

ode::State WaveProblem::initial_state() const { return initial_; }

void WaveProblem::nodes_from_modes(std::span<const double> coeffs,
                                   std::vector<double>& out) const {
  const int nq = quad_.size();
  out.assign(nq, 0.0);
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    const double c = coeffs[k];
    if (c == 0.0) continue;
    const double* row = &sin_table_[static_cast<size_t>(k) * nq];
    for (int j = 0; j < nq; ++j) out[j] += c * row[j];
  }
}

std::vector<double> WaveProblem::project_nodes(const std::vector<double>& values) const {
  const int n = cfg_.n_modes;
  const int nq = quad_.size();
  std::vector<double> coeffs(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double* row = &sin_table_[static_cast<size_t>(k) * nq];
    double s = 0.0;
    for (int j = 0; j < nq; ++j) s += quad_.weights[j] * values[j] * row[j];
    coeffs[k] = 2.0 / kPi * s;
  }
  return coeffs;
}

std::vector<double> WaveProblem::parabolic_gap_rate(std::span<const double> w_pos) const {
  const int n = cfg_.n_modes;
  std::vector<double> w_nodes;
  nodes_from_modes(w_pos, w_nodes);
  for (double& w : w_nodes) w = signed_pow(w, cfg_.p);
  std::vector<double> rate = project_nodes(w_nodes);
  for (int k = 0; k < n; ++k) rate[k] = cfg_.beta * rate[k] - lambda_[k] * w_pos[k];
  return rate;
}

void WaveProblem::rhs(std::span<const double> y, std::span<double> dydt) const {
  const int n = cfg_.n_modes;
  const int nq = quad_.size();
  std::vector<double> nodes(nq), forcing;
  switch (cfg_.problem) {
    case ProblemKind::SingleWave: {
      auto u_pos = y.subspan(0, n), u_vel = y.subspan(n, n);
      nodes_from_modes(u_vel, nodes);
      for (double& v : nodes) v = cfg_.C * std::pow(std::abs(v), cfg_.q);
      forcing = project_nodes(nodes);
      for (int k = 0; k < n; ++k) {
        dydt[k] = u_vel[k];
        dydt[n + k] = -lambda_[k] * u_pos[k] + forcing[k];
      }
      break;
    }
    case ProblemKind::HyperbolicElliptic: {
      auto u_pos = y.subspan(0, n), u_vel = y.subspan(n, n);
      std::vector<double> vt(n);
      for (int k = 0; k < n; ++k) vt[k] = u_vel[k] / lambda_[k];
      nodes_from_modes(vt, nodes);
      for (double& v : nodes) v = cfg_.C * std::pow(std::abs(v), cfg_.q);
      forcing = project_nodes(nodes);
      for (int k = 0; k < n; ++k) {
        dydt[k] = u_vel[k];
        dydt[n + k] = -lambda_[k] * u_pos[k] + forcing[k];
      }
      break;
    }
    case ProblemKind::WaveSystem: {
      auto u_pos = y.subspan(0, n), u_vel = y.subspan(n, n);
      auto v_pos = y.subspan(2 * n, n), v_vel = y.subspan(3 * n, n);
      nodes_from_modes(v_vel, nodes);
      for (double& v : nodes) v = std::pow(std::abs(v), cfg_.p);
      forcing = project_nodes(nodes);
      for (int k = 0; k < n; ++k) {
        dydt[k] = u_vel[k];
        dydt[n + k] = -lambda_[k] * u_pos[k] + forcing[k];
      }
      nodes_from_modes(u_vel, nodes);
      for (double& v : nodes) v = std::pow(std::abs(v), cfg_.q);
      forcing = project_nodes(nodes);
      for (int k = 0; k < n; ++k) {
        dydt[2 * n + k] = v_vel[k];
        dydt[3 * n + k] = -lambda_[k] * v_pos[k] + forcing[k];
      }
      break;
    }
    case ProblemKind::HyperbolicParabolic: {
      auto u_pos = y.subspan(0, n), u_vel = y.subspan(n, n);
      auto w_pos = y.subspan(2 * n, n);
      const std::vector<double> w_rate = parabolic_gap_rate(w_pos);
      std::vector<double> vt(n);
      for (int k = 0; k < n; ++k) vt[k] = u_vel[k] - w_rate[k];
      nodes_from_modes(vt, nodes);
      for (double& v : nodes) v = std::pow(std::abs(v), cfg_.q);
      forcing = project_nodes(nodes);
      for (int k = 0; k < n; ++k) {
        dydt[k] = u_vel[k];
        dydt[n + k] = -lambda_[k] * u_pos[k] + forcing[k];
        dydt[2 * n + k] = w_rate[k];
      }
      break;
    }
  }
}

ode::Field WaveProblem::field() const {
  return ode::Field{state_dimension(),
                    [this](double, std::span<const double> y, std::span<double> dydt) {
                      rhs(y, dydt);
                    },
                    std::string("spectral ") + problem_name(cfg_.problem)};
}

ModalState WaveProblem::unpack(double t, std::span<const double> y) const {
  const int n = cfg_.n_modes;
  ModalState s;
  s.time = t;
  s.u_pos.assign(y.begin(), y.begin() + n);
  s.u_vel.assign(y.begin() + n, y.begin() + 2 * n);
  switch (cfg_.problem) {
    case ProblemKind::SingleWave: break;
    case ProblemKind::HyperbolicElliptic: {
      s.v_pos.resize(n);
      s.v_vel.resize(n);
      for (int k = 0; k < n; ++k) {
        s.v_pos[k] = s.u_pos[k] / lambda_[k];
        s.v_vel[k] = s.u_vel[k] / lambda_[k];
      }
      break;
    }
    case ProblemKind::WaveSystem: {
      s.v_pos.assign(y.begin() + 2 * n, y.begin() + 3 * n);
      s.v_vel.assign(y.begin() + 3 * n, y.begin() + 4 * n);
      break;
    }
    case ProblemKind::HyperbolicParabolic: {
      s.w_pos.assign(y.begin() + 2 * n, y.begin() + 3 * n);
      const std::vector<double> w_rate = parabolic_gap_rate(s.w_pos);
      s.v_pos.resize(n);
      s.v_vel.resize(n);
      for (int k = 0; k < n; ++k) {
        s.v_pos[k] = s.u_pos[k] - s.w_pos[k];
        s.v_vel[k] = s.u_vel[k] - w_rate[k];
      }
      break;
    }
  }
  return s;
}

Projection WaveProblem::project_u_quadrature(const ModalState& s) const {
  std::vector<double> nodes;
  nodes_from_modes(s.u_pos, nodes);
  double v = 0.0;
  for (int j = 0; j < quad_.size(); ++j) v += quad_.weights[j] * nodes[j] * phi_[j];
  nodes_from_modes(s.u_vel, nodes);
  double vp = 0.0;
  for (int j = 0; j < quad_.size(); ++j) vp += quad_.weights[j] * nodes[j] * phi_[j];
  return {v, vp};
}

Projection WaveProblem::project_v(const ModalState& s) const {
  const double c1 = s.v_pos.empty() ? 0.0 : s.v_pos.front();
  const double d1 = s.v_vel.empty() ? 0.0 : s.v_vel.front();
  return {kPi / 4.0 * c1, kPi / 4.0 * d1};
}

double WaveProblem::ut_l1(const ModalState& s) const {
  std::vector<double> nodes;
  nodes_from_modes(s.u_vel, nodes);
  double l1 = 0.0;
  for (int j = 0; j < quad_.size(); ++j) l1 += quad_.weights[j] * std::abs(nodes[j]);
  return l1;
}

double WaveProblem::sum_l1(const ModalState& s) const {
  if (cfg_.problem != ProblemKind::WaveSystem)
    throw std::invalid_argument("sum_l1 applies to the wave system only");
  std::vector<double> u_nodes, v_nodes;
  nodes_from_modes(s.u_vel, u_nodes);
  nodes_from_modes(s.v_vel, v_nodes);
  double l1 = 0.0;
  for (int j = 0; j < quad_.size(); ++j)
    l1 += quad_.weights[j] * std::abs(u_nodes[j] + v_nodes[j]);
  return l1;
}

double WaveProblem::jensen_residual(const ModalState& s) const {
  // Convexity gap of the projected nonlinearity: integral of |w_t|^r phi
  // minus |d/dt of the projection|^r, nonnegative for the probability
  // density phi. w_t is the unknown whose power forces the wave equation.
  std::vector<double> nodes;
  double power = cfg_.q;
  double proj;
  switch (cfg_.problem) {
    case ProblemKind::SingleWave:
    case ProblemKind::WaveSystem: {
      nodes_from_modes(s.u_vel, nodes);
      proj = kPi / 4.0 * (s.u_vel.empty() ? 0.0 : s.u_vel.front());
      break;
    }
    case ProblemKind::HyperbolicElliptic:
    case ProblemKind::HyperbolicParabolic: {
      nodes_from_modes(s.v_vel, nodes);
      proj = kPi / 4.0 * (s.v_vel.empty() ? 0.0 : s.v_vel.front());
      break;
    }
  }
  double integral = 0.0;
  for (int j = 0; j < quad_.size(); ++j)
    integral += quad_.weights[j] * std::pow(std::abs(nodes[j]), power) * phi_[j];
  double residual = integral - std::pow(std::abs(proj), power);
  if (cfg_.problem == ProblemKind::WaveSystem) {
    // Both coupled inequalities carry a convexity step; report the tighter one.
    nodes_from_modes(s.v_vel, nodes);
    const double proj_v = kPi / 4.0 * (s.v_vel.empty() ? 0.0 : s.v_vel.front());
    double integral_v = 0.0;
    for (int j = 0; j < quad_.size(); ++j)
      integral_v += quad_.weights[j] * std::pow(std::abs(nodes[j]), cfg_.p) * phi_[j];
    residual = std::min(residual, integral_v - std::pow(std::abs(proj_v), cfg_.p));
  }
  return residual;
}

double WaveProblem::tail_ratio(const ModalState& s) const {
  auto ratio = [](const std::vector<double>& c) {
    if (c.empty()) return 0.0;
    double mx = 0.0;
    for (double v : c) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return 0.0;
    return std::abs(c.back()) / mx;
  };
  double r = ratio(s.u_pos);
  if (cfg_.problem == ProblemKind::WaveSystem) r = std::max(r, ratio(s.v_pos));
  if (cfg_.problem == ProblemKind::HyperbolicParabolic) r = std::max(r, ratio(s.w_pos));
  return r;
}

}  // namespace blowup::spectral
