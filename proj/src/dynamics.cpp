#include "kuramem/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <ostream>

#include "kuramem/error.hpp"

namespace kuramem {

namespace {

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

TrajectorySample make_sample(const HebbianNetwork& net, const PhaseState& s) {
  TrajectorySample out;
  out.time = s.time;
  out.state = s;
  out.overlaps.reserve(net.memory_count());
  for (const auto& xi : net.memories()) out.overlaps.push_back(overlap(s, xi));
  out.diameter = diameter(s);
  return out;
}

std::string fmt9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !(t_max > 0.0) || !(stop_tol > 0.0) || trace_stride == 0) {
    throw Error(Errc::InvalidConfig, "dt, t_max, stop_tol and trace_stride must be positive");
  }
}

Trajectory integrate(const HebbianNetwork& net, const PhaseState& initial,
                     const IntegratorConfig& cfg) {
  cfg.validate();
  const std::size_t n = net.dimension();
  if (initial.size() != n) throw Error(Errc::DimensionMismatch, "integrate: initial state length");

  Trajectory traj;
  PhaseState state = initial;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  const double h = cfg.dt;
  const double initial_mean = mean(initial.phases);

  traj.samples.push_back(make_sample(net, state));
  rhs_into(net, state.phases, k1);
  while (true) {
    if (inf_norm(k1) < cfg.stop_tol) {
      traj.converged = true;
      break;
    }
    if (state.time >= cfg.t_max - 1e-12 * cfg.t_max) break;

    for (std::size_t i = 0; i < n; ++i) tmp[i] = state.phases[i] + 0.5 * h * k1[i];
    rhs_into(net, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = state.phases[i] + 0.5 * h * k2[i];
    rhs_into(net, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = state.phases[i] + h * k3[i];
    rhs_into(net, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      state.phases[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(state.phases[i])) {
        throw Error(Errc::NonFiniteState, "phase " + std::to_string(i + 1) + " diverged");
      }
    }
    ++traj.steps;
    state.time = static_cast<double>(traj.steps) * h;
    rhs_into(net, state.phases, k1);
    if (traj.steps % cfg.trace_stride == 0) traj.samples.push_back(make_sample(net, state));
  }

  const double drift = initial_mean - mean(state.phases);
  for (double& p : state.phases) p += drift;
  traj.terminal = state;
  if (traj.samples.back().time < state.time) {
    traj.samples.push_back(make_sample(net, state));
  } else {
    traj.samples.back() = make_sample(net, state);
  }
  return traj;
}

PhaseState init_from_gray(const GrayPattern& defective) {
  PhaseState s;
  s.phases.reserve(defective.size());
  for (double x : defective.entries()) {
    if (!(x >= -1.0 && x <= 1.0)) throw Error(Errc::OutOfRange, "gray value outside [-1, 1]");
    s.phases.push_back(std::acos(x));
  }
  return s;
}

double diameter(std::span<const double> phases) {
  if (phases.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(phases.begin(), phases.end());
  return *hi - *lo;
}

PhaseState shifted_state(const PhaseState& s, const BinaryPattern& xi) {
  if (s.size() != xi.size()) throw Error(Errc::DimensionMismatch, "shifted_state");
  const PhaseState star = bipolar_state(xi);
  PhaseState out = s;
  for (std::size_t i = 0; i < s.size(); ++i) out.phases[i] -= star.phases[i];
  return out;
}

double BasinCertificate::bound_at(double t) const {
  return initial_diameter * std::exp(-lambda1 * t);
}

BasinCertificate basin_certificate(const HebbianNetwork& net, int memory_index,
                                   const PhaseState& initial, double h_margin) {
  if (net.memory_count() != 2) {
    throw Error(Errc::WrongMemoryCount, "basin certificate needs a two-memory network");
  }
  if (memory_index != 1 && memory_index != 2) {
    throw Error(Errc::OutOfRange, "memory index must be 1 or 2");
  }
  const PhaseState shifted =
      shifted_state(initial, net.memory(static_cast<std::size_t>(memory_index - 1)));
  BasinCertificate c;
  c.initial_diameter = diameter(shifted);
  c.h = c.initial_diameter * (1.0 + h_margin);
  c.satisfied = c.initial_diameter < std::numbers::pi / 2.0;
  c.lambda1 = 4.0 * net.epsilon() * std::cos(c.h) * std::cos(c.h / 2.0) / std::numbers::pi;
  return c;
}

void write_trajectory_table(std::ostream& os, const Trajectory& traj) {
  os << "t diameter";
  const std::size_t m = traj.samples.empty() ? 0 : traj.samples.front().overlaps.size();
  for (std::size_t k = 0; k < m; ++k) os << " m" << (k + 1);
  os << '\n';
  for (const auto& s : traj.samples) {
    os << fmt9(s.time) << ' ' << fmt9(s.diameter);
    for (double o : s.overlaps) os << ' ' << fmt9(o);
    os << '\n';
  }
}

}  // namespace kuramem
