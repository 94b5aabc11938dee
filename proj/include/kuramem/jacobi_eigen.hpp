#pragma once

#include <cstddef>
#include <vector>

#include "kuramem/matrix.hpp"

namespace kuramem {

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm falls below this.
  double off_norm_tol = 1e-12;
  int max_sweeps = 100;
};

struct JacobiResult {
  std::vector<double> eigenvalues;  // ascending
  int sweeps = 0;
  double off_norm = 0.0;
};

/// Cyclic Jacobi rotation eigensolver for real symmetric matrices.
/// Throws NotSymmetric if |a_ij - a_ji| > 1e-12, NotConverged past the sweep cap.
JacobiResult jacobi_eigenvalues(Matrix a, const JacobiOptions& opts = {});

}  // namespace kuramem
