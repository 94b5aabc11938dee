#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "kuramem/network.hpp"
#include "kuramem/patterns.hpp"

namespace kuramem {

/// Fixed-step integration settings. Explicit RK4 stays well inside its
/// stability region for dt < 2 / (M + 2 eps); the default suits M <= 10.
struct IntegratorConfig {
  double dt = 0.05;
  double t_max = 200.0;
  double stop_tol = 1e-8;  // stop once ||rhs||_inf < stop_tol
  std::size_t trace_stride = 10;

  void validate() const;
};

struct TrajectorySample {
  double time = 0.0;
  PhaseState state;
  std::vector<double> overlaps;  // one per memory
  double diameter = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  PhaseState terminal;
  bool converged = false;
  std::size_t steps = 0;
};

/// Classical RK4 with fixed dt. Samples are kept every trace_stride steps plus
/// the initial and terminal states. After stopping, the terminal state is
/// re-centred to the initial mean phase.
Trajectory integrate(const HebbianNetwork& net, const PhaseState& initial,
                     const IntegratorConfig& cfg = {});

/// phi_i = arccos(gray_i), in [0, pi].
PhaseState init_from_gray(const GrayPattern& defective);

/// max_i phi_i - min_i phi_i, no wrapping.
double diameter(std::span<const double> phases);
inline double diameter(const PhaseState& s) { return diameter(s.phases); }

/// phi - phi*(xi), coordinate-wise (no wrapping).
PhaseState shifted_state(const PhaseState& s, const BinaryPattern& xi);

struct BasinCertificate {
  double h = 0.0;                 // H: bound on the shifted diameter
  double lambda1 = 0.0;           // 4 eps cos H cos(H/2) / pi
  double initial_diameter = 0.0;  // D of the shifted initial state
  bool satisfied = false;         // initial_diameter < pi/2

  /// D(0) exp(-lambda1 t); meaningful only when satisfied.
  double bound_at(double t) const;
};

/// Basin certificate for memory `memory_index` (1 or 2) of a two-memory network.
/// H is taken as the shifted initial diameter times (1 + h_margin).
BasinCertificate basin_certificate(const HebbianNetwork& net, int memory_index,
                                   const PhaseState& initial, double h_margin = 0.0);

/// Writes "t diameter m1 m2 ..." followed by one row per stored sample.
void write_trajectory_table(std::ostream& os, const Trajectory& traj);

}  // namespace kuramem
