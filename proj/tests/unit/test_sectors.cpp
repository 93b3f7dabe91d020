#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "spinon/errors.hpp"
#include "spinon/sector_models.hpp"
#include "test_support.hpp"

using namespace spinon;
using namespace spinon::sector;
using Catch::Approx;

namespace {

DickeModel dicke(double s, double omega, double epsilon, double g) {
  DickeModel m;
  m.s = SpinQuantum::from_value(s);
  m.omega = omega;
  m.epsilon = epsilon;
  m.g = g;
  return m;
}

}  // namespace

TEST_CASE("lowest Dicke sector is one-dimensional", "[sector][dicke]") {
  for (double s : {0.5, 1.0, 2.5}) {
    const auto m = dicke(s, 1.3, 0.7, 0.4);
    const auto sector = dicke_sector(m, -s);
    REQUIRE(sector.eigenvalues.size() == 1);
    CHECK(sector.eigenvalues[0] == Approx(-0.7 * s));
    CHECK(sector.basis[0] == std::array<int, 2>{0, -static_cast<int>(2 * s)});
  }
}

TEST_CASE("Jaynes-Cummings doublet", "[sector][dicke]") {
  const double omega = 1.0, epsilon = 1.4, g = 0.3;
  const auto sector = dicke_sector(dicke(0.5, omega, epsilon, g), 0.5);
  REQUIRE(sector.eigenvalues.size() == 2);
  const double root = std::sqrt((epsilon - omega) * (epsilon - omega) / 4 + g * g);
  CHECK(sector.eigenvalues[0] == Approx(omega / 2 - root).margin(1e-14));
  CHECK(sector.eigenvalues[1] == Approx(omega / 2 + root).margin(1e-14));
}

TEST_CASE("Dicke sectors have the expected basis", "[sector][dicke]") {
  const auto m = dicke(1.0, 1.0, 1.0, 0.2);
  const auto sector = dicke_sector(m, 3.0);
  // n + sigma = 3 with |sigma| <= 1: n = 2, 3, 4.
  REQUIRE(sector.basis.size() == 3);
  CHECK(sector.basis[0] == std::array<int, 2>{2, 2});
  CHECK(sector.basis[2] == std::array<int, 2>{4, -2});
  CHECK_THROWS_AS(dicke_sector(m, -1.5), EmptySector);
  CHECK_THROWS_AS(dicke_sector(m, 0.5), EmptySector);
  CHECK_THROWS_AS(dicke_sector(dicke(0.5, 1, 1, 0.2), 1.0), EmptySector);
}

TEST_CASE("Dicke Hamiltonian commutes with the excitation number", "[sector][dicke]") {
  for (double s : {0.5, 1.0, 1.5}) {
    const auto m = dicke(s, 1.0, 0.8, 0.6);
    const Matrix h = dicke_truncated_hamiltonian(m, 12);
    const Matrix r = dicke_excitation_operator(m.s, 12);
    CHECK(test::max_abs(h * r - r * h) <= 1e-12);
    CHECK(hermiticity_defect(h) == 0.0);
  }
}

TEST_CASE("sector union reproduces the truncated spectrum", "[sector][dicke]") {
  const int n_max = 10;
  for (double s : {0.5, 1.0}) {
    const auto m = dicke(s, 1.0, 1.2, 0.35);
    const auto full = dicke_truncated_full(m, n_max);
    CHECK(full.size() == static_cast<std::size_t>((n_max + 1) * m.s.dim()));
    std::vector<double> sectors;
    for (int i = 0; -s + i <= n_max - s; ++i)
      for (double e : dicke_sector(m, -s + i).eigenvalues) sectors.push_back(e);
    std::sort(sectors.begin(), sectors.end());
    const double window = dicke_safe_window(m, n_max);
    CHECK(window == Approx(0.5 * n_max));
    std::size_t compared = 0;
    for (std::size_t k = 0; k < full.size() && full[k] < window; ++k, ++compared)
      CHECK(full[k] == Approx(sectors[k]).margin(1e-8));
    CHECK(compared >= 4);
  }
}

TEST_CASE("decoupled Dicke levels", "[sector][dicke]") {
  const auto m = dicke(1.0, 1.0, 0.37, 0.0);
  const auto full = dicke_truncated_full(m, 4);
  std::vector<double> expected;
  for (int n = 0; n <= 4; ++n)
    for (int sigma = -1; sigma <= 1; ++sigma) expected.push_back(n + 0.37 * sigma);
  std::sort(expected.begin(), expected.end());
  for (std::size_t k = 0; k < full.size(); ++k) CHECK(full[k] == Approx(expected[k]).margin(1e-13));
}

TEST_CASE("two-oscillator sectors", "[sector][oscillators]") {
  TwoOscillatorModel m{1.0, 0.45, 0.2};
  const auto zero = two_oscillator_sector(m, 0);
  REQUIRE(zero.eigenvalues.size() == 1);
  CHECK(zero.eigenvalues[0] == Approx(0.0).margin(1e-14));

  const auto two = two_oscillator_sector(m, 2);
  REQUIRE(two.eigenvalues.size() == 2);
  const double root = std::sqrt(std::pow(m.omega - 2 * m.capital_omega, 2) / 4 + 2 * m.g * m.g);
  CHECK(two.eigenvalues[0] == Approx((m.omega + 2 * m.capital_omega) / 2 - root).margin(1e-14));
  CHECK(two.eigenvalues[1] == Approx((m.omega + 2 * m.capital_omega) / 2 + root).margin(1e-14));

  const auto seven = two_oscillator_sector(m, 7);
  CHECK(seven.basis.size() == 4);
  for (const auto& [na, nb] : seven.basis) CHECK(2 * na + nb == 7);
  CHECK_THROWS_AS(two_oscillator_sector(m, -1), EmptySector);
}

TEST_CASE("decoupled oscillators", "[sector][oscillators]") {
  TwoOscillatorModel m{1.3, 0.4, 0.0};
  const auto sector = two_oscillator_sector(m, 6);
  std::vector<double> expected;
  for (int na = 0; na <= 3; ++na) expected.push_back(1.3 * na + 0.4 * (6 - 2 * na));
  std::sort(expected.begin(), expected.end());
  REQUIRE(sector.eigenvalues.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(sector.eigenvalues[k] == Approx(expected[k]).margin(1e-13));
}

TEST_CASE("two-oscillator Hamiltonian conserves 2 n_a + n_b", "[sector][oscillators]") {
  TwoOscillatorModel m{1.0, 0.6, 0.25};
  const Matrix h = two_oscillator_truncated_hamiltonian(m, 6, 12);
  const Matrix n = two_oscillator_conserved_operator(6, 12);
  CHECK(test::max_abs(h * n - n * h) <= 1e-12);

  // Each closed sector matches the block of the truncated matrix.
  const auto sector = two_oscillator_sector(m, 5);
  std::vector<Eigen::Index> rows;
  for (const auto& [na, nb] : sector.basis) rows.push_back(na * 13 + nb);
  Matrix block(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = h(rows[i], rows[j]);
  const auto e = hermitian_eigenvalues(block);
  for (std::size_t k = 0; k < rows.size(); ++k)
    CHECK(sector.eigenvalues[k] == Approx(e(static_cast<Eigen::Index>(k))).margin(1e-12));
}
