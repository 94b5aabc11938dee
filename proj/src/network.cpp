#include "kuramem/network.hpp"

#include <cmath>
#include <numbers>

#include "kuramem/error.hpp"

namespace kuramem {

namespace {

void require_dimension(const HebbianNetwork& net, std::size_t n) {
  if (net.dimension() != n) {
    throw Error(Errc::DimensionMismatch, "network has N=" + std::to_string(net.dimension()) +
                                             ", state has " + std::to_string(n));
  }
}

// Z_k = sum_j xi^k_j e^{i phi_j}; stored as (re, im) pairs.
struct Phasors {
  std::vector<double> cos_phi, sin_phi;
  std::vector<double> zr, zi;  // one per memory
  double wr = 0.0, wi = 0.0;   // sum_j e^{2 i phi_j}
};

Phasors phasors(const HebbianNetwork& net, std::span<const double> phases) {
  const std::size_t n = phases.size();
  const std::size_t m = net.memory_count();
  Phasors p;
  p.cos_phi.resize(n);
  p.sin_phi.resize(n);
  p.zr.assign(m, 0.0);
  p.zi.assign(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = std::cos(phases[j]);
    const double s = std::sin(phases[j]);
    p.cos_phi[j] = c;
    p.sin_phi[j] = s;
    p.wr += c * c - s * s;
    p.wi += 2.0 * s * c;
  }
  for (std::size_t k = 0; k < m; ++k) {
    const auto& xi = net.memory(k);
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      re += xi[j] * p.cos_phi[j];
      im += xi[j] * p.sin_phi[j];
    }
    p.zr[k] = re;
    p.zi[k] = im;
  }
  return p;
}

}  // namespace

HebbianNetwork::HebbianNetwork(std::vector<BinaryPattern> memories, double epsilon)
    : memories_(std::move(memories)), epsilon_(epsilon), n_(0) {
  if (memories_.empty()) throw Error(Errc::WrongMemoryCount, "need at least one memory");
  if (!(epsilon_ >= 0.0) || !std::isfinite(epsilon_)) {
    throw Error(Errc::NegativeEpsilon, "epsilon = " + std::to_string(epsilon_));
  }
  n_ = memories_.front().size();
  for (const auto& xi : memories_) {
    if (xi.size() != n_) throw Error(Errc::DimensionMismatch, "memories differ in length");
  }
  for (std::size_t k = 0; k < memories_.size(); ++k)
    for (std::size_t l = k + 1; l < memories_.size(); ++l)
      if (sign_equivalent(memories_[k], memories_[l])) {
        throw Error(Errc::AntipodalMemories, "memories " + std::to_string(k + 1) + " and " +
                                                 std::to_string(l + 1) + " are sign-equivalent");
      }

  coupling_ = Matrix(n_);
  for (const auto& xi : memories_)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) coupling_(i, j) += xi[i] * xi[j];
}

HebbianNetwork HebbianNetwork::with_epsilon(double epsilon) const {
  return HebbianNetwork(memories_, epsilon);
}

HebbianNetwork build_network(std::vector<BinaryPattern> memories, double epsilon) {
  return HebbianNetwork(std::move(memories), epsilon);
}

void rhs_into(const HebbianNetwork& net, std::span<const double> phases, std::span<double> out) {
  require_dimension(net, phases.size());
  if (out.size() != phases.size()) throw Error(Errc::DimensionMismatch, "output buffer size");
  const std::size_t n = phases.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const Phasors p = phasors(net, phases);

  // sum_j C_ij sin(phi_j - phi_i) = sum_k xi^k_i Im(e^{-i phi_i} Z_k)
  // sum_j sin 2(phi_j - phi_i)    = Im(e^{-2 i phi_i} W)
  for (std::size_t i = 0; i < n; ++i) {
    const double c = p.cos_phi[i], s = p.sin_phi[i];
    double hebb = 0.0;
    for (std::size_t k = 0; k < net.memory_count(); ++k) {
      hebb += net.memory(k)[i] * (c * p.zi[k] - s * p.zr[k]);
    }
    const double c2 = c * c - s * s, s2 = 2.0 * s * c;
    const double second = c2 * p.wi - s2 * p.wr;
    out[i] = inv_n * hebb + net.epsilon() * inv_n * second;
  }
}

std::vector<double> rhs(const HebbianNetwork& net, std::span<const double> phases) {
  std::vector<double> out(phases.size());
  rhs_into(net, phases, out);
  return out;
}

double potential(const HebbianNetwork& net, std::span<const double> phases) {
  require_dimension(net, phases.size());
  const double n = static_cast<double>(phases.size());
  const Phasors p = phasors(net, phases);
  // sum_ij C_ij cos(phi_j - phi_i) = sum_k |Z_k|^2
  double hebb = 0.0;
  for (std::size_t k = 0; k < net.memory_count(); ++k) {
    hebb += p.zr[k] * p.zr[k] + p.zi[k] * p.zi[k];
  }
  const double second = p.wr * p.wr + p.wi * p.wi;
  return -hebb / (2.0 * n) - net.epsilon() * second / (4.0 * n);
}

PhaseState bipolar_state(const BinaryPattern& eta) {
  PhaseState s;
  s.phases.resize(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) s.phases[i] = eta[i] > 0 ? 0.0 : std::numbers::pi;
  return s;
}

double overlap(std::span<const double> phases, const BinaryPattern& eta) {
  if (phases.size() != eta.size()) {
    throw Error(Errc::DimensionMismatch, "overlap: state and pattern lengths differ");
  }
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    re += eta[i] * std::cos(phases[i]);
    im += eta[i] * std::sin(phases[i]);
  }
  const double m = std::hypot(re, im) / static_cast<double>(eta.size());
  return m > 1.0 ? 1.0 : m;
}

}  // namespace kuramem
