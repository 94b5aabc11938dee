#pragma once

// Hebbian oscillator network
//
//   dphi_i/dt = (1/N) sum_j C_ij sin(phi_j - phi_i)
//             + (eps/N) sum_j sin 2(phi_j - phi_i),     C_ij = sum_k xi^k_i xi^k_j
//
// together with its potential, bipolar equilibria and the overlap diagnostic.

#include <cstddef>
#include <span>
#include <vector>

#include "kuramem/matrix.hpp"
#include "kuramem/patterns.hpp"

namespace kuramem {

struct PhaseState {
  std::vector<double> phases;
  double time = 0.0;

  std::size_t size() const noexcept { return phases.size(); }
};

class HebbianNetwork {
 public:
  /// Throws DimensionMismatch, NegativeEpsilon, WrongMemoryCount (empty list)
  /// or AntipodalMemories (some pair sign-equivalent).
  HebbianNetwork(std::vector<BinaryPattern> memories, double epsilon);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t memory_count() const noexcept { return memories_.size(); }
  const std::vector<BinaryPattern>& memories() const noexcept { return memories_; }
  const BinaryPattern& memory(std::size_t k) const { return memories_.at(k); }
  double epsilon() const noexcept { return epsilon_; }
  const Matrix& coupling() const noexcept { return coupling_; }

  /// Same memories, different second-harmonic strength.
  HebbianNetwork with_epsilon(double epsilon) const;

 private:
  std::vector<BinaryPattern> memories_;
  double epsilon_;
  std::size_t n_;
  Matrix coupling_;
};

HebbianNetwork build_network(std::vector<BinaryPattern> memories, double epsilon);

/// Vector field at `phases`. Evaluated through the rank-M factorisation of C,
/// O(N*M) per call.
std::vector<double> rhs(const HebbianNetwork& net, std::span<const double> phases);
inline std::vector<double> rhs(const HebbianNetwork& net, const PhaseState& s) {
  return rhs(net, s.phases);
}

/// In-place variant for the integrator's inner loop.
void rhs_into(const HebbianNetwork& net, std::span<const double> phases, std::span<double> out);

/// f(phi) = -(1/2N) sum_ij C_ij cos(phi_j - phi_i) - (eps/4N) sum_ij cos 2(phi_j - phi_i),
/// so that rhs = -grad f.
double potential(const HebbianNetwork& net, std::span<const double> phases);
inline double potential(const HebbianNetwork& net, const PhaseState& s) {
  return potential(net, s.phases);
}

/// phi_i = 0 where eta_i = +1 and pi where eta_i = -1.
PhaseState bipolar_state(const BinaryPattern& eta);

/// m(eta) = |(1/N) sum_i eta_i exp(i phi_i)|.
double overlap(std::span<const double> phases, const BinaryPattern& eta);
inline double overlap(const PhaseState& s, const BinaryPattern& eta) {
  return overlap(s.phases, eta);
}

}  // namespace kuramem
