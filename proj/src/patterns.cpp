#include "kuramem/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "kuramem/error.hpp"

namespace kuramem {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": " + std::to_string(a) +
                                             " vs " + std::to_string(b));
  }
}

IndexSet merged(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BinaryPattern::BinaryPattern(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw Error(Errc::InvalidPattern, "binary pattern needs at least 2 entries");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != 1 && entries_[i] != -1) {
      throw Error(Errc::InvalidPattern,
                  "entry " + std::to_string(i + 1) + " is " + std::to_string(entries_[i]));
    }
  }
}

BinaryPattern::BinaryPattern(std::initializer_list<int> entries)
    : BinaryPattern(std::vector<int>(entries)) {}

BinaryPattern BinaryPattern::from_signs(std::string_view signs) {
  std::vector<int> v;
  v.reserve(signs.size());
  for (char c : signs) {
    if (c == '+') {
      v.push_back(1);
    } else if (c == '-') {
      v.push_back(-1);
    } else {
      throw Error(Errc::InvalidPattern, std::string("bad sign character '") + c + "'");
    }
  }
  return BinaryPattern(std::move(v));
}

BinaryPattern BinaryPattern::negated() const {
  std::vector<int> v(entries_);
  for (int& x : v) x = -x;
  return BinaryPattern(std::move(v));
}

BinaryPattern BinaryPattern::canonical() const {
  return entries_.front() == 1 ? *this : negated();
}

std::string BinaryPattern::to_signs() const {
  std::string s;
  s.reserve(entries_.size());
  for (int x : entries_) s.push_back(x > 0 ? '+' : '-');
  return s;
}

GrayPattern::GrayPattern(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::OutOfRange, "gray pattern is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double x = entries_[i];
    if (!(x >= -1.0 && x <= 1.0)) {
      throw Error(Errc::OutOfRange,
                  "gray entry " + std::to_string(i + 1) + " = " + std::to_string(x) +
                      " outside [-1, 1]");
    }
  }
}

GrayPattern GrayPattern::from_binary(const BinaryPattern& p) {
  std::vector<double> v(p.entries().begin(), p.entries().end());
  return GrayPattern(std::move(v));
}

IndexSet TwoMemoryRefinement::i11() const { return merged(i11_plus, i11_minus); }
IndexSet TwoMemoryRefinement::i12() const { return merged(i12_plus, i12_minus); }
IndexSet TwoMemoryRefinement::i21() const { return merged(i21_plus, i21_minus); }
IndexSet TwoMemoryRefinement::i22() const { return merged(i22_plus, i22_minus); }

IndexSet ThreeMemoryIndexSets::j11() const { return merged(j11_plus, j11_minus); }
IndexSet ThreeMemoryIndexSets::j12() const { return merged(j12_plus, j12_minus); }
IndexSet ThreeMemoryIndexSets::j21() const { return merged(j21_plus, j21_minus); }
IndexSet ThreeMemoryIndexSets::j22() const { return merged(j22_plus, j22_minus); }
IndexSet ThreeMemoryIndexSets::j1() const { return merged(j11(), j12()); }
IndexSet ThreeMemoryIndexSets::j2() const { return merged(j21(), j22()); }

TwoMemoryIndexSets index_sets_two(const BinaryPattern& xi1, const BinaryPattern& xi2,
                                  const std::optional<BinaryPattern>& eta) {
  require_same_size(xi1.size(), xi2.size(), "memories");
  if (eta) require_same_size(xi1.size(), eta->size(), "probe pattern");
  if (sign_equivalent(xi1, xi2)) {
    throw Error(Errc::AntipodalMemories, "xi1 = +-xi2");
  }

  TwoMemoryIndexSets out;
  if (eta) out.refined.emplace();
  for (std::size_t i = 0; i < xi1.size(); ++i) {
    const bool agree = xi1[i] == xi2[i];
    (agree ? out.i1 : out.i2).push_back(i);
    if (!eta) continue;
    auto& r = *out.refined;
    const bool plus = xi1[i] == 1;
    const bool eta_matches = (*eta)[i] == xi1[i];
    IndexSet* target = nullptr;
    if (agree) {
      target = eta_matches ? (plus ? &r.i11_plus : &r.i11_minus)
                           : (plus ? &r.i12_plus : &r.i12_minus);
    } else {
      target = eta_matches ? (plus ? &r.i21_plus : &r.i21_minus)
                           : (plus ? &r.i22_plus : &r.i22_minus);
    }
    target->push_back(i);
  }
  return out;
}

ThreeMemoryIndexSets index_sets_three(const BinaryPattern& xi1, const BinaryPattern& xi2,
                                      const BinaryPattern& xi3) {
  require_same_size(xi1.size(), xi2.size(), "memories");
  require_same_size(xi1.size(), xi3.size(), "memories");
  if (xi1 == xi2.negated() || xi1 == xi3.negated() || xi2 == xi3.negated()) {
    throw Error(Errc::AntipodalMemories, "some pair of memories is antipodal");
  }

  ThreeMemoryIndexSets out;
  for (std::size_t j = 0; j < xi1.size(); ++j) {
    const bool plus = xi1[j] == 1;
    IndexSet* target = nullptr;
    if (xi2[j] == xi3[j]) {
      target = xi2[j] == xi1[j] ? (plus ? &out.j11_plus : &out.j11_minus)
                                : (plus ? &out.j12_plus : &out.j12_minus);
    } else {
      target = xi2[j] == xi1[j] ? (plus ? &out.j21_plus : &out.j21_minus)
                                : (plus ? &out.j22_plus : &out.j22_minus);
    }
    target->push_back(j);
  }
  return out;
}

std::size_t hamming(const BinaryPattern& a, const BinaryPattern& b) {
  require_same_size(a.size(), b.size(), "hamming");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

bool sign_equivalent(const BinaryPattern& a, const BinaryPattern& b) {
  const std::size_t d = hamming(a, b);
  return d == 0 || d == a.size();
}

long dot(const BinaryPattern& a, const BinaryPattern& b) {
  require_same_size(a.size(), b.size(), "dot");
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k] + 1);
  }
  out += '}';
  return out;
}

BinaryPattern pattern_from_bits(std::uint64_t bits, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = ((bits >> i) & 1U) ? -1 : 1;
  return BinaryPattern(std::move(v));
}

}  // namespace kuramem
