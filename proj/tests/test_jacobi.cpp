#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "kuramem/error.hpp"
#include "kuramem/jacobi_eigen.hpp"

#ifdef KURAMEM_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace kuramem;
using doctest::Approx;

namespace {

Matrix random_symmetric(std::mt19937_64& g, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(g);
  return a;
}

}  // namespace

TEST_CASE("diagonal and scaled identity inputs") {
  Matrix a(4);
  a(0, 0) = 3.0;
  a(1, 1) = -1.0;
  a(2, 2) = 2.0;
  a(3, 3) = 0.5;
  const auto r = jacobi_eigenvalues(a);
  CHECK(r.eigenvalues == std::vector<double>{-1.0, 0.5, 2.0, 3.0});
  CHECK(r.sweeps == 0);
}

TEST_CASE("two-by-two closed form") {
  Matrix a(2);
  a(0, 0) = 2.0;
  a(0, 1) = a(1, 0) = 1.0;
  a(1, 1) = 2.0;
  const auto r = jacobi_eigenvalues(a);
  CHECK(r.eigenvalues[0] == Approx(1.0).epsilon(1e-14));
  CHECK(r.eigenvalues[1] == Approx(3.0).epsilon(1e-14));
}

TEST_CASE("asymmetric input is rejected") {
  Matrix a(2);
  a(0, 1) = 1.0;
  try {
    jacobi_eigenvalues(a);
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }
}

TEST_CASE("trace and Frobenius norm are preserved") {
  std::mt19937_64 g(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + g() % 30;
    const Matrix a = random_symmetric(g, n);
    const auto r = jacobi_eigenvalues(a);
    double tr = 0.0, fro = 0.0, sum = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      tr += a(i, i);
      for (std::size_t j = 0; j < n; ++j) fro += a(i, j) * a(i, j);
    }
    for (double l : r.eigenvalues) {
      sum += l;
      sq += l * l;
    }
    CHECK(sum == Approx(tr).epsilon(1e-12).scale(1.0));
    CHECK(sq == Approx(fro).epsilon(1e-12).scale(1.0));
    CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
    CHECK(r.off_norm < 1e-12);
  }
}

#ifdef KURAMEM_HAVE_EIGEN
TEST_CASE("eigenvalues match an independent solver") {
  std::mt19937_64 g(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + g() % 40;
    const Matrix a = random_symmetric(g, n);
    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
    const auto r = jacobi_eigenvalues(a);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(r.eigenvalues[i] - solver.eigenvalues()(static_cast<Eigen::Index>(i))) < 1e-11);
    }
  }
}
#endif
