#include "kuramem/pattern_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "kuramem/error.hpp"
#include "kuramem/rng.hpp"

namespace kuramem {

namespace {

constexpr std::string_view kBinaryMagic = "P\xC2\xB1" "1";
constexpr std::string_view kGrayMagic = "G";

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back({l, number++});
    start = end + 1;
  }
  return lines;
}

// Column of byte offset `pos` in `line`, counting UTF-8 code points.
std::size_t column_of(std::string_view line, std::size_t pos) {
  std::size_t col = 1;
  for (std::size_t i = 0; i < pos && i < line.size(); ++i) {
    if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
  }
  while (pos < line.size() && (static_cast<unsigned char>(line[pos]) & 0xC0) == 0x80) ++pos;
  return col;
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start});
  }
  return out;
}

std::size_t parse_dimension(const Line& line, const Token& tok, const char* name) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0) {
    throw ParseError(line.number, column_of(line.text, tok.offset),
                     std::string("invalid ") + name + " '" + std::string(tok.text) + "'");
  }
  return value;
}

PatternFile parse_binary_body(const std::vector<Line>& lines, std::size_t w, std::size_t h) {
  std::vector<int> entries;
  entries.reserve(w * h);
  for (std::size_t r = 0; r < h; ++r) {
    if (r + 1 >= lines.size()) {
      const std::size_t line_no = lines.back().number + 1 + (r + 1 - lines.size());
      throw ParseError(line_no, 1, "expected " + std::to_string(h) + " rows, found " +
                                       std::to_string(r));
    }
    const Line& line = lines[r + 1];
    for (std::size_t c = 0; c < line.text.size(); ++c) {
      const char ch = line.text[c];
      if (ch != '#' && ch != '.') {
        throw ParseError(line.number, column_of(line.text, c),
                         "unexpected character in binary body");
      }
      if (c >= w) {
        throw ParseError(line.number, c + 1, "row longer than width " + std::to_string(w));
      }
      entries.push_back(ch == '#' ? 1 : -1);
    }
    if (line.text.size() < w) {
      throw ParseError(line.number, line.text.size() + 1,
                       "row shorter than width " + std::to_string(w));
    }
  }
  for (std::size_t k = h + 1; k < lines.size(); ++k) {
    if (!lines[k].text.empty()) {
      throw ParseError(lines[k].number, 1, "trailing content after " + std::to_string(h) + " rows");
    }
  }
  if (entries.size() < 2) throw ParseError(1, 1, "pattern needs at least 2 entries");
  return {w, h, BinaryPattern(std::move(entries))};
}

PatternFile parse_gray_body(const std::vector<Line>& lines, std::size_t w, std::size_t h) {
  std::vector<double> entries;
  entries.reserve(w * h);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    for (const Token& tok : tokenize(line.text)) {
      const std::size_t col = column_of(line.text, tok.offset);
      if (entries.size() == w * h) throw ParseError(line.number, col, "more than width*height values");
      double v = 0.0;
      const char* first = tok.text.data();
      const char* last = first + tok.text.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ParseError(line.number, col, "invalid number '" + std::string(tok.text) + "'");
      }
      if (v < -1.0 || v > 1.0) {
        throw Error(Errc::RangeError, "line " + std::to_string(line.number) + ", column " +
                                          std::to_string(col) + ": gray value " +
                                          std::string(tok.text) + " outside [-1, 1]");
      }
      entries.push_back(v);
    }
  }
  if (entries.size() != w * h) {
    const std::size_t line_no = lines.back().number;
    throw ParseError(line_no, lines.back().text.size() + 1,
                     "expected " + std::to_string(w * h) + " values, found " +
                         std::to_string(entries.size()));
  }
  return {w, h, GrayPattern(std::move(entries))};
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

const BinaryPattern& PatternFile::binary() const {
  if (!is_binary()) throw Error(Errc::InvalidPattern, "expected a binary pattern, got gray");
  return std::get<BinaryPattern>(pattern);
}

GrayPattern PatternFile::gray() const {
  if (is_binary()) return GrayPattern::from_binary(std::get<BinaryPattern>(pattern));
  return std::get<GrayPattern>(pattern);
}

PatternFile parse_pattern(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty pattern file");
  const Line& header = lines.front();
  const std::vector<Token> toks = tokenize(header.text);
  if (toks.empty()) throw ParseError(1, 1, "missing header");
  const bool binary = toks[0].text == kBinaryMagic;
  if (!binary && toks[0].text != kGrayMagic) {
    throw ParseError(1, column_of(header.text, toks[0].offset),
                     "unknown header '" + std::string(toks[0].text) + "'");
  }
  if (toks.size() != 3) {
    const std::size_t col =
        toks.size() > 3 ? column_of(header.text, toks[3].offset) : column_of(header.text, header.text.size());
    throw ParseError(1, col, "header must be '<magic> <width> <height>'");
  }
  const std::size_t w = parse_dimension(header, toks[1], "width");
  const std::size_t h = parse_dimension(header, toks[2], "height");
  return binary ? parse_binary_body(lines, w, h) : parse_gray_body(lines, w, h);
}

PatternFile load_pattern(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_pattern(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path.string());
  }
}

std::string format_pattern(const PatternFile& file) {
  std::string out;
  if (file.is_binary()) {
    const BinaryPattern& p = std::get<BinaryPattern>(file.pattern);
    if (p.size() != file.width * file.height) {
      throw Error(Errc::DimensionMismatch, "pattern size differs from width*height");
    }
    out += std::string(kBinaryMagic) + " " + std::to_string(file.width) + " " +
           std::to_string(file.height) + "\n";
    for (std::size_t r = 0; r < file.height; ++r) {
      for (std::size_t c = 0; c < file.width; ++c) out += p[r * file.width + c] > 0 ? '#' : '.';
      out += '\n';
    }
  } else {
    const GrayPattern& p = std::get<GrayPattern>(file.pattern);
    if (p.size() != file.width * file.height) {
      throw Error(Errc::DimensionMismatch, "pattern size differs from width*height");
    }
    out += std::string(kGrayMagic) + " " + std::to_string(file.width) + " " +
           std::to_string(file.height) + "\n";
    for (std::size_t r = 0; r < file.height; ++r) {
      for (std::size_t c = 0; c < file.width; ++c) {
        if (c) out += ' ';
        out += shortest(p[r * file.width + c]);
      }
      out += '\n';
    }
  }
  return out;
}

void save_pattern(const std::filesystem::path& path, const PatternFile& file) {
  const std::string text = format_pattern(file);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

GrayPattern corrupt(const BinaryPattern& pattern, std::size_t width, const Corruption& mode) {
  const std::size_t n = pattern.size();
  std::vector<double> g(pattern.entries().begin(), pattern.entries().end());

  if (const auto* flip = std::get_if<FlipBits>(&mode)) {
    if (flip->k > n) {
      throw Error(Errc::ParameterOutOfRange, "cannot flip " + std::to_string(flip->k) +
                                                 " of " + std::to_string(n) + " entries");
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    SeededRng rng(flip->seed);
    for (std::size_t i = 0; i < flip->k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(idx[i], idx[j]);
      g[idx[i]] = -g[idx[i]];
    }
  } else if (const auto* noise = std::get_if<UniformNoise>(&mode)) {
    if (!(noise->amplitude >= 0.0) || !std::isfinite(noise->amplitude)) {
      throw Error(Errc::ParameterOutOfRange, "noise amplitude must be finite and >= 0");
    }
    SeededRng rng(noise->seed);
    for (double& x : g) x = std::clamp(x + noise->amplitude * rng.symmetric(), -1.0, 1.0);
  } else {
    const auto& mask = std::get<MaskRows>(mode);
    if (width == 0 || n % width != 0) {
      throw Error(Errc::ParameterOutOfRange, "width does not divide the pattern length");
    }
    const std::size_t rows = n / width;
    if (mask.first > mask.last || mask.last >= rows) {
      throw Error(Errc::ParameterOutOfRange, "row window outside 0.." + std::to_string(rows - 1));
    }
    std::fill(g.begin() + static_cast<std::ptrdiff_t>(mask.first * width),
              g.begin() + static_cast<std::ptrdiff_t>((mask.last + 1) * width), 0.0);
  }
  return GrayPattern(std::move(g));
}

}  // namespace kuramem
