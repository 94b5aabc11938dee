#pragma once

// Jacobians at bipolar equilibria, their closed-form spectra for two- and
// three-memory networks, critical second-harmonic strengths, and stability
// classification.
//
// Eigenspace labels follow the usual notation:
//   V[1]      the shift mode spanned by (1,...,1)
//   V(I)      vectors supported on I with zero sum            (dim |I|-1)
//   V(I;K)    the line through x with x_i=|K| on I, -|I| on K  (dim 1)

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kuramem/matrix.hpp"
#include "kuramem/network.hpp"
#include "kuramem/patterns.hpp"

namespace kuramem {

inline constexpr double kClusterTol = 1e-8;
inline constexpr double kMarginalTol = 1e-10;
inline constexpr const char* kShiftLabel = "V[1]";

struct SpectrumEntry {
  double eigenvalue = 0.0;
  std::size_t multiplicity = 0;
  std::string label;
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
  std::size_t n = 0;
  /// Unclustered eigenvalues, ascending; filled only by numeric_spectrum.
  std::vector<double> raw;

  std::size_t total_multiplicity() const;
  /// Every eigenvalue repeated by multiplicity, ascending.
  std::vector<double> eigenvalues() const;
  /// Largest eigenvalue once a single copy of the shift-mode zero is removed.
  /// For analytic reports the V[1] entry is dropped; for numeric ones the raw
  /// eigenvalue closest to zero is.
  double lambda_max_nonzero() const;
};

enum class Stability { Stable, Unstable, Marginal };
enum class SpectrumSource { AnalyticM2, AnalyticM3, Numeric };

const char* to_string(Stability s) noexcept;
const char* to_string(SpectrumSource s) noexcept;

struct StabilityVerdict {
  Stability status = Stability::Marginal;
  double lambda_max_nonzero = 0.0;
  SpectrumSource source = SpectrumSource::Numeric;
};

/// Verdict from lambda_max_nonzero with the +-kMarginalTol band.
Stability stability_from_lambda(double lambda_max_nonzero) noexcept;

enum class CriticalRegime { Generic, Boundary, ThreeMemory };

struct CriticalEpsilon {
  double value = 0.0;
  CriticalRegime regime = CriticalRegime::Generic;
  int memory = 0;  // 1-based memory index for ThreeMemory, 0 otherwise
};

const char* to_string(CriticalRegime r) noexcept;

/// Off-diagonal C_ij eta_i eta_j / N + 2 eps / N, rows summing to zero.
Matrix jacobian(const HebbianNetwork& net, const BinaryPattern& eta);

/// Dense eigenvalues clustered into groups within kClusterTol, labelled "numeric".
SpectrumReport numeric_spectrum(const Matrix& j);

/// Spectrum at either memory of a two-memory network.
SpectrumReport analytic_spectrum_memory_m2(const HebbianNetwork& net);

/// Spectrum at a non-memory pattern of a two-memory network. Throws IsMemory
/// for eta in {+-xi1, +-xi2}.
SpectrumReport analytic_spectrum_pattern_m2(const HebbianNetwork& net, const BinaryPattern& eta);

/// Spectrum at memory `which` (1, 2 or 3) of a three-memory network.
SpectrumReport analytic_spectrum_memory_m3(const HebbianNetwork& net, int which);

CriticalEpsilon critical_epsilon_m2(const BinaryPattern& xi1, const BinaryPattern& xi2);

/// Thresholds for the three memories; requires J11, J12, J21, J22 nonempty.
std::vector<CriticalEpsilon> critical_epsilon_m3(const BinaryPattern& xi1,
                                                 const BinaryPattern& xi2,
                                                 const BinaryPattern& xi3);

/// Lower bound on a pattern's critical strength known for mutually orthogonal
/// memories: max_l (N^2 - sum_k (xi^k.eta)^2) / (2 (N^2 - (xi^l.eta)^2)).
/// Terms with a vanishing denominator are skipped; throws DegenerateOverlap if all vanish.
double legacy_epsilon_lower_bound(const std::vector<BinaryPattern>& memories,
                                  const BinaryPattern& eta);

struct Classification {
  StabilityVerdict verdict;
  SpectrumReport spectrum;
};

/// Spectrum and verdict: analytic for M=2, and for M=3 at a memory; numeric otherwise.
Classification classify_with_spectrum(const HebbianNetwork& net, const BinaryPattern& eta);
StabilityVerdict classify(const HebbianNetwork& net, const BinaryPattern& eta);

/// lambda_max_nonzero from the dense eigensolver, regardless of M.
double numeric_lambda_max_nonzero(const HebbianNetwork& net, const BinaryPattern& eta);

/// Index of the memory sign-equivalent to eta, if any (0-based).
std::optional<std::size_t> matching_memory(const HebbianNetwork& net, const BinaryPattern& eta);

}  // namespace kuramem
