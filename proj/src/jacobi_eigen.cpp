#include "kuramem/jacobi_eigen.hpp"

#include <algorithm>
#include <cmath>

#include "kuramem/error.hpp"

namespace kuramem {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Zero a(p,q) by a plane rotation applied on both sides (Rutishauser's form).
void rotate(Matrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  // Below rounding level relative to both diagonal entries: drop it.
  const double g = 100.0 * std::abs(apq);
  if (std::abs(a(p, p)) + g == std::abs(a(p, p)) && std::abs(a(q, q)) + g == std::abs(a(q, q))) {
    a(p, q) = a(q, p) = 0.0;
    return;
  }
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    a(r, p) = a(p, r) = new_rp;
    a(r, q) = a(q, r) = new_rq;
  }
}

}  // namespace

JacobiResult jacobi_eigenvalues(Matrix a, const JacobiOptions& opts) {
  if (a.asymmetry() > 1e-12) {
    throw Error(Errc::NotSymmetric, "asymmetry " + std::to_string(a.asymmetry()));
  }
  const std::size_t n = a.size();
  // Symmetrise exactly so the two triangles stay in lock-step.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));

  JacobiResult out;
  out.off_norm = off_diagonal_norm(a);
  while (out.off_norm >= opts.off_norm_tol) {
    if (out.sweeps >= opts.max_sweeps) {
      throw Error(Errc::NotConverged, "Jacobi did not converge in " +
                                          std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    ++out.sweeps;
    out.off_norm = off_diagonal_norm(a);
  }

  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

}  // namespace kuramem
