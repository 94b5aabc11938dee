#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kuramem/error.hpp"
#include "kuramem/pattern_io.hpp"

using namespace kuramem;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kuramem_io_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_pattern(text);
    FAIL("expected ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("binary pattern files") {
  const auto f = parse_pattern("P±1 2 1\n#.");
  CHECK(f.width == 2);
  CHECK(f.height == 1);
  CHECK(f.binary() == BinaryPattern({1, -1}));

  const auto g = parse_pattern("P±1 3 2\n#.#\n..#\n");
  CHECK(g.binary() == BinaryPattern({1, -1, 1, -1, -1, 1}));
  CHECK(parse_pattern("P±1 2 1\r\n.#\r\n").binary() == BinaryPattern({-1, 1}));
}

TEST_CASE("gray pattern files") {
  const auto f = parse_pattern("G 2 1\n0.5 -1.0");
  CHECK_FALSE(f.is_binary());
  CHECK(f.gray() == GrayPattern({0.5, -1.0}));
  CHECK(parse_pattern("G 2 2\n0 1\n\n  -0.25\t+1e-1\n").gray() == GrayPattern({0, 1, -0.25, 0.1}));
  CHECK(parse_pattern("P±1 2 1\n#.").gray() == GrayPattern({1.0, -1.0}));
  CHECK_THROWS_AS(f.binary(), Error);
}

TEST_CASE("syntax errors carry line and column") {
  check_parse_error("P±1 2 1\n#x", 2, 2);
  check_parse_error("", 1, 1);
  check_parse_error("Q 2 1\n#.", 1, 1);
  check_parse_error("P±1 2\n#.", 1, 6);
  check_parse_error("P±1 2 z\n#.", 1, 7);
  check_parse_error("P±1 2 0\n", 1, 7);
  check_parse_error("P±1 2 1\n#.#", 2, 3);
  check_parse_error("P±1 3 1\n#.", 2, 3);
  check_parse_error("P±1 2 2\n#.", 3, 1);
  check_parse_error("P±1 2 1\n#.\n##", 3, 1);
  check_parse_error("G 2 1\n0.5 abc", 2, 5);
  check_parse_error("G 2 1\n0.5", 2, 4);
  check_parse_error("G 1 1\n0.5 0.5", 2, 5);
  check_parse_error("G 1 1\nnan", 2, 1);
}

TEST_CASE("gray values outside the unit interval") {
  try {
    parse_pattern("G 2 1\n0.5 1.5");
    FAIL("expected RangeError");
  } catch (const ParseError&) {
    FAIL("range violations are not syntax errors");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RangeError);
  }
}

TEST_CASE("canonical files round-trip byte for byte") {
  const std::string binary = "P±1 3 2\n#.#\n..#\n";
  CHECK(format_pattern(parse_pattern(binary)) == binary);

  const std::string gray = "G 3 1\n0.1 -1 0.3333333333333333\n";
  CHECK(format_pattern(parse_pattern(gray)) == gray);

  const auto path = temp_file("roundtrip.pat");
  save_pattern(path, parse_pattern(binary));
  CHECK(slurp(path) == binary);
  CHECK(load_pattern(path).binary() == parse_pattern(binary).binary());
  std::filesystem::remove(path);

  const PatternFile odd{2, 1, GrayPattern({1.0 / 3.0, -0.7})};
  CHECK(parse_pattern(format_pattern(odd)).gray() == odd.gray());
}

TEST_CASE("file loading errors") {
  try {
    load_pattern(temp_file("does_not_exist.pat"));
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
  const auto path = temp_file("bad.pat");
  {
    std::ofstream(path) << "P±1 2 1\n#?\n";
  }
  try {
    load_pattern(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
  std::filesystem::remove(path);
}

TEST_CASE("flip corruption") {
  const BinaryPattern p({1, -1, 1, 1, -1, -1, 1, 1});
  CHECK(corrupt(p, 4, FlipBits{0, 99}) == GrayPattern::from_binary(p));
  const GrayPattern all = corrupt(p, 4, FlipBits{8, 5});
  CHECK(all == GrayPattern::from_binary(p.negated()));

  const GrayPattern three = corrupt(p, 4, FlipBits{3, 42});
  std::size_t changed = 0;
  for (std::size_t i = 0; i < p.size(); ++i) changed += three[i] != p[i];
  CHECK(changed == 3);
  CHECK(corrupt(p, 4, FlipBits{3, 42}) == three);
  CHECK_THROWS_AS(corrupt(p, 4, FlipBits{9, 1}), Error);
}

TEST_CASE("flip corruption golden output on a glyph") {
  const auto glyph = load_pattern(KURAMEM_DATA_DIR "/glyphs/2_one.pat");
  const GrayPattern out = corrupt(glyph.binary(), glyph.width, FlipBits{3, 42});
  const std::string golden = slurp(KURAMEM_DATA_DIR "/golden/2_one_flip3_seed42.pat");
  CHECK(format_pattern({glyph.width, glyph.height, out}) == golden);
}

TEST_CASE("uniform noise corruption") {
  const BinaryPattern p({1, -1, 1, -1, 1, -1});
  CHECK(corrupt(p, 6, UniformNoise{0.0, 3}) == GrayPattern::from_binary(p));
  const GrayPattern a = corrupt(p, 6, UniformNoise{0.4, 3});
  CHECK(a == corrupt(p, 6, UniformNoise{0.4, 3}));
  CHECK_FALSE(a == corrupt(p, 6, UniformNoise{0.4, 5}));
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(a[i] >= -1.0);
    CHECK(a[i] <= 1.0);
    CHECK(std::abs(a[i] - p[i]) <= 0.4);
  }
  CHECK_THROWS_AS(corrupt(p, 6, UniformNoise{-0.1, 3}), Error);
}

TEST_CASE("row masking") {
  const BinaryPattern p({1, -1, 1, -1, 1, -1});
  CHECK(corrupt(p, 2, MaskRows{0, 2}) == GrayPattern(std::vector<double>(6, 0.0)));
  CHECK(corrupt(p, 2, MaskRows{1, 1}) == GrayPattern({1, -1, 0, 0, 1, -1}));
  try {
    corrupt(p, 2, MaskRows{1, 3});
    FAIL("expected ParameterOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParameterOutOfRange);
  }
  CHECK_THROWS_AS(corrupt(p, 4, MaskRows{0, 0}), Error);
  CHECK_THROWS_AS(corrupt(p, 2, MaskRows{2, 1}), Error);
}
