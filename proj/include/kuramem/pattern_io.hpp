#pragma once

// Plain-text pattern files.
//
//   P±1 <width> <height>        G <width> <height>
//   #..#                        0.5 -1 0 1
//   .##.                        ...
//
// Binary bodies have one line per row, '#' = +1 and '.' = -1. Gray bodies hold
// width*height whitespace-separated reals in [-1, 1]. Both flatten row-major.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "kuramem/patterns.hpp"

namespace kuramem {

struct PatternFile {
  std::size_t width = 0;
  std::size_t height = 0;
  std::variant<BinaryPattern, GrayPattern> pattern;

  bool is_binary() const noexcept { return std::holds_alternative<BinaryPattern>(pattern); }
  const BinaryPattern& binary() const;  // InvalidPattern if gray
  /// Binary patterns are converted.
  GrayPattern gray() const;
};

/// ParseError (with 1-based line and column) on malformed input, RangeError for
/// gray values outside [-1, 1].
PatternFile parse_pattern(std::string_view text);
PatternFile load_pattern(const std::filesystem::path& path);

/// Canonical text. Gray values use the shortest round-trip representation.
std::string format_pattern(const PatternFile& file);
void save_pattern(const std::filesystem::path& path, const PatternFile& file);

struct FlipBits {
  std::size_t k = 0;
  std::uint64_t seed = 0;
};

struct UniformNoise {
  double amplitude = 0.0;
  std::uint64_t seed = 0;
};

/// Rows first..last, 0-based and inclusive.
struct MaskRows {
  std::size_t first = 0;
  std::size_t last = 0;
};

using Corruption = std::variant<FlipBits, UniformNoise, MaskRows>;

/// `width` is the row length, used only by MaskRows. Throws ParameterOutOfRange
/// for k > N, negative amplitude, or a row window outside the pattern.
GrayPattern corrupt(const BinaryPattern& pattern, std::size_t width, const Corruption& mode);

}  // namespace kuramem
