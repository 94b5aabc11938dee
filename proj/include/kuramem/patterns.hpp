#pragma once

// Binary (+1/-1) and grayscale patterns plus the index-set bookkeeping that
// parameterizes the closed-form Jacobian spectra.
//
// Indices are 0-based everywhere in the API. Reports add 1 when printing.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kuramem {

class BinaryPattern {
 public:
  /// Throws InvalidPattern unless every entry is +1 or -1 and size >= 2.
  explicit BinaryPattern(std::vector<int> entries);
  BinaryPattern(std::initializer_list<int> entries);

  /// Parses a compact sign string such as "++-+" ('+'/'-' only).
  static BinaryPattern from_signs(std::string_view signs);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }

  BinaryPattern negated() const;
  /// Representative of {p, -p} whose first entry is +1.
  BinaryPattern canonical() const;
  std::string to_signs() const;

  friend bool operator==(const BinaryPattern&, const BinaryPattern&) = default;

 private:
  std::vector<int> entries_;
};

class GrayPattern {
 public:
  /// Throws OutOfRange unless every entry lies in [-1, 1]; size must be >= 1.
  explicit GrayPattern(std::vector<double> entries);

  static GrayPattern from_binary(const BinaryPattern& p);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }

  friend bool operator==(const GrayPattern&, const GrayPattern&) = default;

 private:
  std::vector<double> entries_;
};

/// Sorted list of 0-based indices.
using IndexSet = std::vector<std::size_t>;

/// Refinement of I1/I2 against a probe pattern eta. "plus"/"minus" is the
/// common sign of xi^1 on that index.
struct TwoMemoryRefinement {
  IndexSet i11_plus, i11_minus;  // xi1 = xi2 = eta
  IndexSet i12_plus, i12_minus;  // xi1 = xi2 = -eta
  IndexSet i21_plus, i21_minus;  // xi1 = -xi2 = eta
  IndexSet i22_plus, i22_minus;  // xi1 = -xi2 = -eta

  IndexSet i11() const;
  IndexSet i12() const;
  IndexSet i21() const;
  IndexSet i22() const;
};

struct TwoMemoryIndexSets {
  IndexSet i1;  // xi1_i == xi2_i
  IndexSet i2;  // xi1_i != xi2_i
  std::optional<TwoMemoryRefinement> refined;
};

/// Index sets for three memories, taken relative to the first one.
struct ThreeMemoryIndexSets {
  IndexSet j11_plus, j11_minus;  // xi2 = xi3 = xi1
  IndexSet j12_plus, j12_minus;  // xi2 = xi3 = -xi1
  IndexSet j21_plus, j21_minus;  // xi2 = -xi3 = xi1
  IndexSet j22_plus, j22_minus;  // xi2 = -xi3 = -xi1

  IndexSet j11() const;
  IndexSet j12() const;
  IndexSet j21() const;
  IndexSet j22() const;
  IndexSet j1() const;  // xi2 == xi3
  IndexSet j2() const;  // xi2 == -xi3
};

/// Throws DimensionMismatch or AntipodalMemories (xi1 = +-xi2).
TwoMemoryIndexSets index_sets_two(const BinaryPattern& xi1, const BinaryPattern& xi2,
                                  const std::optional<BinaryPattern>& eta = std::nullopt);

/// Throws DimensionMismatch, or AntipodalMemories when some pair is exactly
/// negated. Identical memories are accepted here (one of J1/J2 comes out empty)
/// and rejected later by the three-memory spectral routines.
ThreeMemoryIndexSets index_sets_three(const BinaryPattern& xi1, const BinaryPattern& xi2,
                                      const BinaryPattern& xi3);

std::size_t hamming(const BinaryPattern& a, const BinaryPattern& b);
bool sign_equivalent(const BinaryPattern& a, const BinaryPattern& b);
/// Inner product sum_i a_i b_i.
long dot(const BinaryPattern& a, const BinaryPattern& b);

/// Renders an index set 1-based, e.g. "{1,2,3}".
std::string format_index_set(const IndexSet& s);

/// Decodes the integer `bits` into a pattern of length n: bit i set -> -1.
BinaryPattern pattern_from_bits(std::uint64_t bits, std::size_t n);

}  // namespace kuramem
