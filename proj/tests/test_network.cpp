#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kuramem/error.hpp"
#include "kuramem/network.hpp"
#include "oracles.hpp"

using namespace kuramem;
using doctest::Approx;

namespace {

BinaryPattern P(const char* s) { return BinaryPattern::from_signs(s); }

Errc code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::IoError;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> random_phases(std::mt19937_64& g, std::size_t n) {
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  std::vector<double> v(n);
  for (auto& x : v) x = u(g);
  return v;
}

std::vector<BinaryPattern> random_memories(std::mt19937_64& g, std::size_t n, std::size_t m) {
  std::vector<BinaryPattern> out;
  while (out.size() < m) {
    auto p = oracle::random_pattern(g, n);
    bool ok = true;
    for (const auto& q : out) ok = ok && !sign_equivalent(p, q);
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("coupling matrix construction") {
  const HebbianNetwork one({P("+-")}, 0.0);
  CHECK(one.coupling()(0, 0) == 1.0);
  CHECK(one.coupling()(0, 1) == -1.0);
  CHECK(one.coupling()(1, 0) == -1.0);
  CHECK(one.coupling()(1, 1) == 1.0);

  const HebbianNetwork blocks({P("++++++"), P("+++---")}, 0.5);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const bool same = (i < 3) == (j < 3);
      CHECK(blocks.coupling()(i, j) == (same ? 2.0 : 0.0));
    }

  const std::vector<BinaryPattern> triple{P("+++++"), P("++---"), P("+-+-+")};
  const HebbianNetwork t(triple, 0.1);
  const auto c = oracle::coupling(triple);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(t.coupling()(i, j) == c[i][j]);
}

TEST_CASE("coupling matrix invariants") {
  std::mt19937_64 g(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + g() % 15;
    const std::size_t m = 1 + g() % 4;
    auto mems = random_memories(g, n, m);
    const HebbianNetwork net(mems, 0.3);
    const Matrix& c = net.coupling();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(c(i, i) == static_cast<double>(m));
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(c(i, j) == c(j, i));
        CHECK(std::abs(c(i, j)) <= static_cast<double>(m));
        CHECK(std::fmod(std::abs(c(i, j)) + static_cast<double>(m), 2.0) == 0.0);
      }
    }
    const std::size_t k = g() % m;
    mems[k] = mems[k].negated();
    CHECK(HebbianNetwork(mems, 0.3).coupling() == c);
  }
}

TEST_CASE("network construction errors") {
  CHECK(code_of([] { HebbianNetwork({}, 0.1); }) == Errc::WrongMemoryCount);
  CHECK(code_of([] { HebbianNetwork({P("+-+")}, -0.1); }) == Errc::NegativeEpsilon);
  CHECK(code_of([] { HebbianNetwork({P("+-+")}, NAN); }) == Errc::NegativeEpsilon);
  CHECK(code_of([] { HebbianNetwork({P("+-+"), P("++")}, 0.1); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { HebbianNetwork({P("+-+"), P("-+-")}, 0.1); }) == Errc::AntipodalMemories);
  CHECK(code_of([] { build_network({P("+-+"), P("+-+")}, 0.1); }) == Errc::AntipodalMemories);
  const HebbianNetwork net({P("+-+")}, 0.1);
  CHECK(code_of([&] { rhs(net, std::vector<double>{0.0, 1.0}); }) == Errc::DimensionMismatch);
  CHECK(code_of([&] { potential(net, std::vector<double>{0.0, 1.0}); }) == Errc::DimensionMismatch);
  CHECK(code_of([&] { overlap(std::vector<double>{0.0, 1.0}, P("+-+")); }) == Errc::DimensionMismatch);
}

TEST_CASE("rhs on simple states") {
  const HebbianNetwork two({P("++")}, 0.0);
  const auto v = rhs(two, std::vector<double>{0.0, std::numbers::pi / 2});
  CHECK(v[0] == Approx(0.5).epsilon(1e-15));
  CHECK(v[1] == Approx(-0.5).epsilon(1e-15));

  const HebbianNetwork blocks({P("++++++"), P("+++---")}, 0.25);
  CHECK(inf_norm(rhs(blocks, std::vector<double>(6, 0.7))) < 1e-14);
  CHECK(inf_norm(rhs(blocks, bipolar_state(P("++++++")))) < 1e-14);
}

TEST_CASE("rhs and potential agree with the dense double sums") {
  std::mt19937_64 g(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + g() % 30;
    const std::size_t m = 1 + g() % std::min<std::size_t>(4, (1u << (n - 1)));
    const double eps = 0.1 * static_cast<double>(g() % 20);
    const auto mems = random_memories(g, n, m);
    const HebbianNetwork net(mems, eps);
    const auto phi = random_phases(g, n);
    const auto fast = rhs(net, phi);
    const auto slow = oracle::rhs(mems, eps, phi);
    for (std::size_t i = 0; i < n; ++i) CHECK(fast[i] == Approx(slow[i]).epsilon(1e-12).scale(1.0));
    CHECK(potential(net, phi) == Approx(oracle::potential(mems, eps, phi)).epsilon(1e-12).scale(1.0));
    double sum = 0.0;
    for (double x : fast) sum += x;
    CHECK(std::abs(sum) < 1e-12);
  }
}

TEST_CASE("potential values") {
  const std::vector<BinaryPattern> pair{P("++++++"), P("+++---")};
  const HebbianNetwork net(pair, 0.5);
  CHECK(potential(net, bipolar_state(pair[0])) == Approx(-3.75).epsilon(1e-14));
  CHECK(oracle::potential(pair, 0.5, oracle::bipolar(pair[0])) == Approx(-3.75).epsilon(1e-14));

  const HebbianNetwork flat(pair, 0.0);
  const std::vector<double> equal(6, 0.3);
  CHECK(potential(flat, equal) == Approx(oracle::potential(pair, 0.0, equal)).epsilon(1e-14));
  CHECK(potential(flat, equal) == Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("shift invariance of rhs and potential") {
  std::mt19937_64 g(8);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + g() % 20;
    const auto mems = random_memories(g, n, 1 + g() % std::min<std::size_t>(3, (1u << (n - 1))));
    const HebbianNetwork net(mems, 0.4);
    auto phi = random_phases(g, n);
    const auto before = rhs(net, phi);
    const double f0 = potential(net, phi);
    const double c = shift(g);
    for (auto& x : phi) x += c;
    const auto after = rhs(net, phi);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(after[i] - before[i]) < 1e-12);
    CHECK(std::abs(potential(net, phi) - f0) < 1e-12);
  }
}

TEST_CASE("rhs is the negative gradient of the potential") {
  std::mt19937_64 g(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + g() % 19;
    const auto mems = random_memories(g, n, 1 + g() % std::min<std::size_t>(4, (1u << (n - 1))));
    const HebbianNetwork net(mems, 0.05 + 0.1 * static_cast<double>(g() % 10));
    const auto phi = random_phases(g, n);
    const auto grad = oracle::fd_gradient(
        [&](const std::vector<double>& x) { return potential(net, x); }, phi);
    const auto v = rhs(net, phi);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(v[i] + grad[i]) < 1e-6);
  }
}

TEST_CASE("bipolar states") {
  CHECK(bipolar_state(P("+++")).phases == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(bipolar_state(P("+-+")).phases == std::vector<double>{0.0, std::numbers::pi, 0.0});

  std::mt19937_64 g(10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + g() % 30;
    const auto mems = random_memories(g, n, 1 + g() % std::min<std::size_t>(5, (1u << (n - 1))));
    const HebbianNetwork net(mems, 0.1 * static_cast<double>(g() % 15));
    const auto eta = oracle::random_pattern(g, n);
    CHECK(inf_norm(rhs(net, bipolar_state(eta))) < 1e-12);
  }
}

TEST_CASE("overlap values") {
  const auto eta = P("++-+-+--");
  CHECK(overlap(bipolar_state(eta), eta) == Approx(1.0).epsilon(1e-15));
  CHECK(overlap(bipolar_state(eta), eta.negated()) == Approx(1.0).epsilon(1e-15));
  CHECK(overlap(bipolar_state(P("++++----")), P("++++++++")) < 1e-15);
  CHECK(overlap(bipolar_state(P("--++++++")), P("++++++++")) == Approx(0.5).epsilon(1e-15));

  std::mt19937_64 g(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + g() % 20;
    const auto a = oracle::random_pattern(g, n);
    auto phi = random_phases(g, n);
    const double m = overlap(phi, a);
    CHECK(m >= 0.0);
    CHECK(m <= 1.0);
    CHECK(overlap(phi, a.negated()) == Approx(m).epsilon(1e-14));
    for (auto& x : phi) x += 1.234;
    CHECK(overlap(phi, a) == Approx(m).epsilon(1e-12));
  }
}
