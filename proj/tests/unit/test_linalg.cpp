#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "spinon/errors.hpp"
#include "spinon/linalg.hpp"
#include "spinon/spin_algebra.hpp"
#include "spinon/tridiagonal.hpp"
#include "test_support.hpp"

using namespace spinon;
using Catch::Approx;

TEST_CASE("Jacobi eigensolver on small fixed matrices", "[linalg]") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 3.0, 1.0, 2.0;
  const auto e = hermitian_eigenvalues(d);
  CHECK(e(0) == 1.0);
  CHECK(e(1) == 2.0);
  CHECK(e(2) == 3.0);

  const auto sx = build_spin_operators(SpinQuantum(1)).sx;
  const auto es = hermitian_eigensystem(sx);
  CHECK(es.eigenvalues(0) == Approx(-0.5));
  CHECK(es.eigenvalues(1) == Approx(0.5));
}

TEST_CASE("Jacobi eigensolver on random Hermitian matrices", "[linalg]") {
  std::mt19937_64 rng(7);
  for (int dim : {1, 2, 5, 17, 64}) {
    const Matrix a = test::random_hermitian(dim, rng);
    const auto es = hermitian_eigensystem(a);
    const double norm = a.norm();
    const Matrix& v = es.eigenvectors;
    CHECK(test::max_abs(v.adjoint() * v - Matrix::Identity(dim, dim)) <= 1e-10);
    for (int k = 0; k < dim; ++k) {
      CHECK((a * v.col(k) - es.eigenvalues(k) * v.col(k)).norm() <= 1e-10 * norm);
      if (k > 0) CHECK(es.eigenvalues(k - 1) <= es.eigenvalues(k));
    }
    const Matrix rebuilt = v * es.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    CHECK((a - rebuilt).norm() <= 1e-9 * norm);
  }
}

TEST_CASE("non-Hermitian input is rejected", "[linalg]") {
  Matrix a = Matrix::Identity(3, 3);
  a(0, 1) = 1.0;
  CHECK(hermiticity_defect(a) > 0.1);
  CHECK_THROWS_AS(hermitian_eigensystem(a), NonHermitianInput);
  CHECK_THROWS_AS(hermitian_eigensystem(Matrix::Zero(2, 3)), NonHermitianInput);
}

TEST_CASE("unitary evolution", "[linalg]") {
  std::mt19937_64 rng(11);
  const Matrix h = test::random_hermitian(6, rng);
  Vector v = test::random_matrix(6, rng).col(0);
  CHECK((evolve(h, 0.0, v) - v).norm() < 1e-12 * v.norm());
  for (double t : {0.1, 1.7, 25.0}) CHECK(evolve(h, t, v).norm() == Approx(v.norm()).epsilon(1e-10));

  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << -1.0, 0.5, 2.0;
  Vector basis = Vector::Zero(3);
  basis(1) = 1.0;
  const Vector out = evolve(d, 2.0, basis);
  CHECK(std::abs(out(1) - std::exp(Complex(0.0, -1.0))) < 1e-14);
  CHECK(std::abs(out(0)) + std::abs(out(2)) < 1e-14);

  const auto es = hermitian_eigensystem(h);
  const Matrix u = propagator(es, 0.7);
  CHECK(test::max_abs(u * propagator(es, -0.7) - Matrix::Identity(6, 6)) < 1e-12);
}

TEST_CASE("matrix dump lists every entry", "[linalg]") {
  Matrix a(2, 2);
  a << Complex(1.0, 0.0), Complex(0.0, 2.0), Complex(0.0, -2.0), Complex(3.5, 0.0);
  std::ostringstream out;
  write_matrix_csv(out, a);
  CHECK(out.str() == "row,col,re,im\n0,0,1,0\n0,1,0,2\n1,0,0,-2\n1,1,3.5,0\n");
}

TEST_CASE("tridiagonal bisection matches the discrete Laplacian", "[tridiagonal]") {
  const std::size_t n = 50;
  SymmetricTridiagonal t{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
  const auto values = tridiagonal_eigenvalues(t);
  REQUIRE(values.size() == n);
  for (std::size_t k = 0; k < n; ++k) {
    const double exact = 2.0 - 2.0 * std::cos(M_PI * static_cast<double>(k + 1) / static_cast<double>(n + 1));
    CHECK(values[k] == Approx(exact).margin(1e-13));
  }
  CHECK(sturm_count(t, 0.0) == 0);
  CHECK(sturm_count(t, 2.0) == n / 2);
  CHECK(sturm_count(t, 5.0) == n);

  const auto middle = tridiagonal_eigenvalues(t, 10, 3);
  CHECK(middle[0] == Approx(values[10]).margin(1e-13));
  CHECK(middle[2] == Approx(values[12]).margin(1e-13));
  CHECK_THROWS_AS(tridiagonal_eigenvalues(t, 49, 2), InvalidArgument);
  CHECK_THROWS_AS(tridiagonal_eigenvalues(SymmetricTridiagonal{}), InvalidArgument);
}

TEST_CASE("tridiagonal bisection keeps absolute accuracy for large entries", "[tridiagonal]") {
  const std::size_t n = 4001;
  const double h = 1e-3;
  SymmetricTridiagonal t{std::vector<double>(n, 2.0 / (h * h)), std::vector<double>(n - 1, -1.0 / (h * h))};
  const auto low = tridiagonal_eigenvalues(t, 0, 2);
  const double k1 = M_PI / static_cast<double>(n + 1);
  CHECK(low[0] == Approx((2.0 - 2.0 * std::cos(k1)) / (h * h)).margin(1e-8));
  CHECK(low[1] == Approx((2.0 - 2.0 * std::cos(2 * k1)) / (h * h)).margin(1e-8));
}

TEST_CASE("tridiagonal eigenvectors", "[tridiagonal]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 40;
  SymmetricTridiagonal t;
  for (std::size_t i = 0; i < n; ++i) t.diagonal.push_back(u(rng));
  for (std::size_t i = 0; i + 1 < n; ++i) t.off_diagonal.push_back(u(rng));
  const auto values = tridiagonal_eigenvalues(t);
  const auto vectors = tridiagonal_eigenvectors(t, values);
  for (std::size_t k = 0; k < n; ++k) {
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = t.diagonal[i] * vectors[k][i] - values[k] * vectors[k][i];
      if (i > 0) r += t.off_diagonal[i - 1] * vectors[k][i - 1];
      if (i + 1 < n) r += t.off_diagonal[i] * vectors[k][i + 1];
      residual += r * r;
    }
    CHECK(std::sqrt(residual) < 1e-10);
    for (std::size_t j = 0; j < k; ++j) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += vectors[k][i] * vectors[j][i];
      CHECK(std::abs(dot) < 1e-8);
    }
  }
}
