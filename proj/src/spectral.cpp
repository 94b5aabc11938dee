#include "kuramem/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kuramem/error.hpp"
#include "kuramem/jacobi_eigen.hpp"

namespace kuramem {

namespace {

double ratio(std::size_t k, std::size_t n) { return static_cast<double>(k) / static_cast<double>(n); }

double diff_ratio(long a, std::size_t n) { return static_cast<double>(a) / static_cast<double>(n); }

long sz(const IndexSet& s) { return static_cast<long>(s.size()); }

// Appends an entry unless its multiplicity is zero.
void add(SpectrumReport& r, double value, long multiplicity, std::string label) {
  if (multiplicity <= 0) return;
  r.entries.push_back({value, static_cast<std::size_t>(multiplicity), std::move(label)});
}

void require_memory_count(const HebbianNetwork& net, std::size_t m) {
  if (net.memory_count() != m) {
    throw Error(Errc::WrongMemoryCount, "expected " + std::to_string(m) + " memories, network has " +
                                            std::to_string(net.memory_count()));
  }
}

std::string block_label(const std::string& name) {
  return "V(" + name + "+;" + name + "-)+V(" + name + "+)+V(" + name + "-)";
}

}  // namespace

std::size_t SpectrumReport::total_multiplicity() const {
  std::size_t s = 0;
  for (const auto& e : entries) s += e.multiplicity;
  return s;
}

std::vector<double> SpectrumReport::eigenvalues() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.eigenvalue);
  std::sort(out.begin(), out.end());
  return out;
}

double SpectrumReport::lambda_max_nonzero() const {
  std::vector<double> values;
  if (!raw.empty()) {
    values = raw;
    auto closest = std::min_element(values.begin(), values.end(),
                                    [](double a, double b) { return std::abs(a) < std::abs(b); });
    values.erase(closest);
  } else {
    bool dropped = false;
    for (const auto& e : entries) {
      std::size_t m = e.multiplicity;
      if (!dropped && e.label == kShiftLabel) {
        --m;
        dropped = true;
      }
      values.insert(values.end(), m, e.eigenvalue);
    }
    if (!dropped) {
      // No labelled shift mode: fall back to removing the value closest to zero.
      auto closest = std::min_element(values.begin(), values.end(),
                                      [](double a, double b) { return std::abs(a) < std::abs(b); });
      if (closest != values.end()) values.erase(closest);
    }
  }
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  return *std::max_element(values.begin(), values.end());
}

const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Unstable: return "Unstable";
    case Stability::Marginal: return "Marginal";
  }
  return "?";
}

const char* to_string(SpectrumSource s) noexcept {
  switch (s) {
    case SpectrumSource::AnalyticM2: return "AnalyticM2";
    case SpectrumSource::AnalyticM3: return "AnalyticM3";
    case SpectrumSource::Numeric: return "Numeric";
  }
  return "?";
}

const char* to_string(CriticalRegime r) noexcept {
  switch (r) {
    case CriticalRegime::Generic: return "Generic";
    case CriticalRegime::Boundary: return "Boundary";
    case CriticalRegime::ThreeMemory: return "ThreeMemory";
  }
  return "?";
}

Stability stability_from_lambda(double lambda) noexcept {
  if (lambda < -kMarginalTol) return Stability::Stable;
  if (lambda > kMarginalTol) return Stability::Unstable;
  return Stability::Marginal;
}

Matrix jacobian(const HebbianNetwork& net, const BinaryPattern& eta) {
  const std::size_t n = net.dimension();
  if (eta.size() != n) throw Error(Errc::DimensionMismatch, "jacobian: pattern length");
  const double inv_n = 1.0 / static_cast<double>(n);
  const double eps_term = 2.0 * net.epsilon() * inv_n;
  const Matrix& c = net.coupling();
  Matrix j(n);
  for (std::size_t r = 0; r < n; ++r) {
    double row = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == r) continue;
      const double v = c(r, s) * eta[r] * eta[s] * inv_n + eps_term;
      j(r, s) = v;
      row += v;
    }
    j(r, r) = -row;
  }
  return j;
}

SpectrumReport numeric_spectrum(const Matrix& j) {
  const JacobiResult eig = jacobi_eigenvalues(j);
  SpectrumReport r;
  r.n = j.size();
  r.raw = eig.eigenvalues;
  std::size_t start = 0;
  while (start < eig.eigenvalues.size()) {
    std::size_t end = start + 1;
    double sum = eig.eigenvalues[start];
    while (end < eig.eigenvalues.size() &&
           eig.eigenvalues[end] - eig.eigenvalues[start] <= kClusterTol) {
      sum += eig.eigenvalues[end];
      ++end;
    }
    r.entries.push_back({sum / static_cast<double>(end - start), end - start, "numeric"});
    start = end;
  }
  return r;
}

SpectrumReport analytic_spectrum_memory_m2(const HebbianNetwork& net) {
  require_memory_count(net, 2);
  const auto sets = index_sets_two(net.memory(0), net.memory(1));
  const std::size_t n = net.dimension();
  const double eps = net.epsilon();

  SpectrumReport r;
  r.n = n;
  add(r, 0.0, 1, kShiftLabel);
  add(r, -2.0 * (ratio(sets.i1.size(), n) + eps), sz(sets.i1) - 1, "V(I1)");
  add(r, -2.0 * (ratio(sets.i2.size(), n) + eps), sz(sets.i2) - 1, "V(I2)");
  add(r, -2.0 * eps, 1, "V(I1;I2)");
  return r;
}

SpectrumReport analytic_spectrum_pattern_m2(const HebbianNetwork& net, const BinaryPattern& eta) {
  require_memory_count(net, 2);
  if (matching_memory(net, eta)) {
    throw Error(Errc::IsMemory, "pattern is a memory; use analytic_spectrum_memory_m2");
  }
  const auto sets = index_sets_two(net.memory(0), net.memory(1), eta);
  const auto& rf = *sets.refined;
  const long i11 = sz(rf.i11()), i12 = sz(rf.i12()), i21 = sz(rf.i21()), i22 = sz(rf.i22());
  const std::size_t n = net.dimension();
  const double eps = net.epsilon();

  SpectrumReport r;
  r.n = n;
  add(r, 0.0, 1, kShiftLabel);
  add(r, -2.0 * eps, 1, "V(I1;I2)");
  if (i11 > 0) add(r, 2.0 * (diff_ratio(i12 - i11, n) - eps), i11 - 1, block_label("I11"));
  if (i12 > 0) add(r, 2.0 * (diff_ratio(i11 - i12, n) - eps), i12 - 1, block_label("I12"));
  if (i11 > 0 && i12 > 0) add(r, 2.0 * (ratio(sets.i1.size(), n) - eps), 1, "V(I11;I12)");
  if (i21 > 0) add(r, 2.0 * (diff_ratio(i22 - i21, n) - eps), i21 - 1, block_label("I21"));
  if (i22 > 0) add(r, 2.0 * (diff_ratio(i21 - i22, n) - eps), i22 - 1, block_label("I22"));
  if (i21 > 0 && i22 > 0) add(r, 2.0 * (ratio(sets.i2.size(), n) - eps), 1, "V(I21;I22)");
  return r;
}

SpectrumReport analytic_spectrum_memory_m3(const HebbianNetwork& net, int which) {
  require_memory_count(net, 3);
  if (which < 1 || which > 3) {
    throw Error(Errc::OutOfRange, "memory index must be 1, 2 or 3");
  }
  // The pivot memory plays the role of xi^1; the other two keep their order.
  const std::size_t pivot = static_cast<std::size_t>(which - 1);
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < 3; ++k)
    if (k != pivot) others.push_back(k);
  const auto js =
      index_sets_three(net.memory(pivot), net.memory(others[0]), net.memory(others[1]));

  const long j11 = sz(js.j11()), j12 = sz(js.j12()), j21 = sz(js.j21()), j22 = sz(js.j22());
  const long j1 = j11 + j12, j2 = j21 + j22;
  const std::size_t n = net.dimension();
  const double two_eps = 2.0 * net.epsilon();

  SpectrumReport r;
  r.n = n;
  add(r, 0.0, 1, kShiftLabel);
  if (j1 > 0 && j2 > 0) add(r, -1.0 - two_eps, 1, "V(J1;J2)");
  if (j11 > 0) add(r, diff_ratio(-3 * j11 + j12 - j2, n) - two_eps, j11 - 1, block_label("J11"));
  if (j12 > 0) add(r, diff_ratio(-3 * j12 + j11 - j2, n) - two_eps, j12 - 1, block_label("J12"));
  if (j11 > 0 && j12 > 0) add(r, diff_ratio(j1 - j2, n) - two_eps, 1, "V(J11;J12)");
  if (j21 > 0) add(r, diff_ratio(-3 * j21 + j22 - j1, n) - two_eps, j21 - 1, block_label("J21"));
  if (j22 > 0) add(r, diff_ratio(-3 * j22 + j21 - j1, n) - two_eps, j22 - 1, block_label("J22"));
  if (j21 > 0 && j22 > 0) add(r, diff_ratio(j2 - j1, n) - two_eps, 1, "V(J21;J22)");
  return r;
}

CriticalEpsilon critical_epsilon_m2(const BinaryPattern& xi1, const BinaryPattern& xi2) {
  const auto sets = index_sets_two(xi1, xi2);
  const std::size_t n = xi1.size();
  const std::size_t i1 = sets.i1.size();
  if (i1 == 1 || i1 == n - 1) {
    return {ratio(n - 1, n), CriticalRegime::Boundary, 0};
  }
  return {ratio(std::min(i1, sets.i2.size()), n), CriticalRegime::Generic, 0};
}

std::vector<CriticalEpsilon> critical_epsilon_m3(const BinaryPattern& xi1,
                                                 const BinaryPattern& xi2,
                                                 const BinaryPattern& xi3) {
  if (sign_equivalent(xi1, xi2) || sign_equivalent(xi1, xi3) || sign_equivalent(xi2, xi3)) {
    throw Error(Errc::AntipodalMemories, "three-memory thresholds need distinct memories");
  }
  const auto js = index_sets_three(xi1, xi2, xi3);
  const std::size_t j11 = js.j11().size(), j12 = js.j12().size();
  const std::size_t j21 = js.j21().size(), j22 = js.j22().size();
  if (j11 == 0 || j12 == 0 || j21 == 0 || j22 == 0) {
    throw Error(Errc::HypothesisViolated, "J11, J12, J21 and J22 must all be nonempty");
  }
  const std::size_t n = xi1.size();
  // | |S|/N - 1/2 | written as |2|S| - N| / 2N.
  auto threshold = [n](std::size_t s) {
    const long twice = 2 * static_cast<long>(s) - static_cast<long>(n);
    return static_cast<double>(std::labs(twice)) / (2.0 * static_cast<double>(n));
  };
  return {{threshold(j11 + j12), CriticalRegime::ThreeMemory, 1},
          {threshold(j11 + j22), CriticalRegime::ThreeMemory, 2},
          {threshold(j11 + j21), CriticalRegime::ThreeMemory, 3}};
}

double legacy_epsilon_lower_bound(const std::vector<BinaryPattern>& memories,
                                  const BinaryPattern& eta) {
  if (memories.empty()) throw Error(Errc::WrongMemoryCount, "need at least one memory");
  const double n = static_cast<double>(eta.size());
  const double n2 = n * n;
  std::vector<double> sq;
  double total = 0.0;
  for (const auto& xi : memories) {
    const double d = static_cast<double>(dot(xi, eta));
    sq.push_back(d * d);
    total += d * d;
  }
  bool any = false;
  double best = -std::numeric_limits<double>::infinity();
  for (double s : sq) {
    const double denom = 2.0 * (n2 - s);
    if (denom == 0.0) continue;
    any = true;
    best = std::max(best, (n2 - total) / denom);
  }
  if (!any) throw Error(Errc::DegenerateOverlap, "eta is sign-equivalent to every memory");
  return best;
}

std::optional<std::size_t> matching_memory(const HebbianNetwork& net, const BinaryPattern& eta) {
  for (std::size_t k = 0; k < net.memory_count(); ++k)
    if (sign_equivalent(net.memory(k), eta)) return k;
  return std::nullopt;
}

Classification classify_with_spectrum(const HebbianNetwork& net, const BinaryPattern& eta) {
  if (eta.size() != net.dimension()) throw Error(Errc::DimensionMismatch, "classify");
  Classification c;
  const auto memory = matching_memory(net, eta);
  if (net.memory_count() == 2) {
    c.spectrum = memory ? analytic_spectrum_memory_m2(net) : analytic_spectrum_pattern_m2(net, eta);
    c.verdict.source = SpectrumSource::AnalyticM2;
  } else if (net.memory_count() == 3 && memory) {
    c.spectrum = analytic_spectrum_memory_m3(net, static_cast<int>(*memory) + 1);
    c.verdict.source = SpectrumSource::AnalyticM3;
  } else {
    c.spectrum = numeric_spectrum(jacobian(net, eta));
    c.verdict.source = SpectrumSource::Numeric;
  }
  c.verdict.lambda_max_nonzero = c.spectrum.lambda_max_nonzero();
  c.verdict.status = stability_from_lambda(c.verdict.lambda_max_nonzero);
  return c;
}

StabilityVerdict classify(const HebbianNetwork& net, const BinaryPattern& eta) {
  return classify_with_spectrum(net, eta).verdict;
}

double numeric_lambda_max_nonzero(const HebbianNetwork& net, const BinaryPattern& eta) {
  return numeric_spectrum(jacobian(net, eta)).lambda_max_nonzero();
}

}  // namespace kuramem
