#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "spinon/classical_spin.hpp"
#include "spinon/dynamics.hpp"
#include "spinon/errors.hpp"
#include "test_support.hpp"

using namespace spinon;
using namespace spinon::dyn;
using Catch::Approx;
using std::numbers::pi;

namespace {

std::vector<double> linspace(double t_max, int steps) {
  std::vector<double> t(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) t[static_cast<std::size_t>(k)] = t_max * k / steps;
  return t;
}

Matrix zeeman_z(const SpinOperatorSet& ops, double b) { return -b * ops.sz; }

}  // namespace

TEST_CASE("trivial observables under precession", "[dynamics]") {
  const SpinQuantum s(3);
  const auto ops = build_spin_operators(s);
  const Matrix h = zeeman_z(ops, 0.8);
  const CoherentPoint p(1.1, 0.4);
  const auto times = linspace(10.0, 40);

  const auto id = observable_evolution(h, Matrix::Identity(4, 4), p, times);
  const auto z = observable_evolution(h, ops.sz, p, times);
  const auto plus = observable_evolution(h, ops.splus, p, times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    CHECK(std::abs(id.values[k] - 1.0) < 1e-12);
    CHECK(std::abs(z.values[k] - s.value() * std::cos(1.1)) < 1e-12);
    const Complex expected = s.value() * std::sin(1.1) * std::exp(Complex(0.0, 0.4 - 0.8 * times[k]));
    CHECK(std::abs(plus.values[k] - expected) < 1e-12);
  }
  CHECK(std::abs(plus.values[0] - covariant_symbol(ops.splus, p)) < 1e-14);
}

TEST_CASE("Heisenberg evolution is unitary conjugation", "[dynamics]") {
  std::mt19937_64 rng(12);
  const Matrix h = test::random_hermitian(4, rng);
  const Matrix g = test::random_hermitian(4, rng);
  const HeisenbergEvolution evolution(h);
  const Matrix gt = evolution.evolve_operator(g, 1.3);
  CHECK(std::abs(gt.trace() - g.trace()) < 1e-12);
  CHECK(test::max_abs(evolution.evolve_operator(h, 2.0) - h) < 1e-12);
  CHECK_THROWS_AS(observable_evolution(h, Matrix::Identity(3, 3), CoherentPoint(1, 1), std::vector<double>{0.0}),
                  InvalidArgument);
}

TEST_CASE("spin components stay within the operator norm", "[dynamics]") {
  const SpinQuantum s(4);
  const auto ops = build_spin_operators(s);
  const Matrix h = build_quadratic_hamiltonian(QuadraticSpinModel::biaxial(s, 0.4, 0.9, 0.3), ops);
  const auto times = linspace(20.0, 80);
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const auto traj = observable_evolution(h, ops[axis], CoherentPoint(0.7, 2.0), times);
    for (const Complex v : traj.values) CHECK(std::abs(v) <= s.value() + 1e-12);
  }
}

TEST_CASE("twisting closed form", "[dynamics][twisting]") {
  SECTION("no twisting is pure precession") {
    const TwistingModel m{SpinQuantum(4), 1.2, 0.0};
    const CoherentPoint p(0.9, 0.3);
    const auto times = linspace(5.0, 20);
    const auto values = twisting_expectation(m, p, times);
    for (std::size_t k = 0; k < times.size(); ++k)
      CHECK(std::abs(values[k] - 2.0 * std::sin(0.9) * std::exp(Complex(0.0, 0.3 - 1.2 * times[k]))) < 1e-14);
  }
  SECTION("spin one-half modulus is constant") {
    const TwistingModel m{SpinQuantum(1), 1.0, 0.7};
    const auto values = twisting_expectation(m, CoherentPoint(1.0, 0.0), linspace(10.0, 50));
    for (const Complex v : values) CHECK(std::abs(v) == Approx(0.5 * std::sin(1.0)).margin(1e-12));
  }
  SECTION("matches exact evolution") {
    for (const auto& [two_s, d] : {std::pair{20, 0.02}, std::pair{2, 0.5}, std::pair{7, 0.3}, std::pair{50, 0.05}}) {
      const TwistingModel m{SpinQuantum(two_s), 1.0, d};
      const CoherentPoint p(pi / 3, 0.25);
      const auto times = linspace(10.0, 60);
      const auto ops = build_spin_operators(m.s);
      const auto exact = observable_evolution(build_quadratic_hamiltonian(m.hamiltonian(), ops), ops.splus, p, times);
      const auto closed = twisting_expectation(m, p, times);
      for (std::size_t k = 0; k < times.size(); ++k) CHECK(std::abs(exact.values[k] - closed[k]) <= 1e-10);
    }
  }
  SECTION("the opposite bracket sign fails the oracle") {
    const TwistingModel m{SpinQuantum(2), 1.0, 0.4};
    const CoherentPoint p(pi / 3, 0.0);
    const double t = 2.0;
    const auto ops = build_spin_operators(m.s);
    const auto exact = observable_evolution(build_quadratic_hamiltonian(m.hamiltonian(), ops), ops.splus, p,
                                            std::vector<double>{t});
    const double tau = m.tau(t);
    const Complex flipped = std::sin(pi / 3) * std::exp(Complex(0.0, -t)) *
                            (std::cos(tau) + Complex(0.0, 1.0) * std::sin(tau) * std::cos(pi / 3));
    CHECK(std::abs(exact.values[0] - flipped) > 1e-2);
  }
  CHECK(TwistingModel{SpinQuantum(10), 1.0, 0.005}.weak_twisting());
  CHECK_FALSE(TwistingModel{SpinQuantum(10), 1.0, 0.5}.weak_twisting());
}

TEST_CASE("residual grid avoids the poles", "[dynamics][closed]") {
  const auto grid = residual_sphere_grid(6, 10);
  CHECK(grid.size() == 60);
  for (const auto& p : grid) {
    CHECK(p.theta() > 0.1);
    CHECK(p.theta() < pi - 0.1);
  }
  CHECK_THROWS_AS(residual_sphere_grid(0, 4), InvalidArgument);
}

TEST_CASE("closed equation for conserved and precessing observables", "[dynamics][closed]") {
  const SpinQuantum s(2);
  const auto grid = residual_sphere_grid(4, 6);
  // With B = 1 and dt = h the time and azimuthal differences cancel exactly.
  const auto zeeman = QuadraticSpinModel(s, Eigen::Matrix3d::Zero(), Eigen::Vector3d(0.0, 0.0, -0.7));
  const auto id = closed_equation_residual(zeeman, Matrix::Identity(3, 3), grid, 0.5, 1e-2, 1e-2);
  CHECK(id.max < 1e-8);

  const auto ops = build_spin_operators(s);
  const Matrix g = ops.sx * ops.sx + 0.5 * ops.sy * ops.sz;
  const auto coarse = closed_equation_residual(zeeman, g, grid, 0.5, 4e-2, 4e-2);
  const auto fine = closed_equation_residual(zeeman, g, grid, 0.5, 2e-2, 2e-2);
  CHECK(coarse.h == 4e-2);
  CHECK(coarse.max / fine.max == Approx(4.0).margin(0.5));
  CHECK(coarse.mean <= coarse.max);
}

TEST_CASE("closed equation residual converges for the uniaxial model", "[dynamics][closed]") {
  const SpinQuantum s(4);
  const auto model = QuadraticSpinModel::uniaxial(s, 1.0);
  const auto grid = residual_sphere_grid(6, 8);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2; ++trial) {
    const Matrix g = test::random_hermitian(s.dim(), rng);
    const auto coarse = closed_equation_residual(model, g, grid, 0.3, 2e-2, 2e-2);
    const auto fine = closed_equation_residual(model, g, grid, 0.3, 1e-2, 1e-2);
    CHECK(coarse.max / fine.max >= 3.5);
    CHECK(coarse.max / fine.max <= 4.5);
    double extrapolated = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      extrapolated = std::max(extrapolated, std::abs(4.0 * fine.residuals[i] - coarse.residuals[i]) / 3.0);
    CHECK(extrapolated <= 0.05 * coarse.max);
  }
}

TEST_CASE("closed equation rejects grids near the poles", "[dynamics][closed]") {
  const SpinQuantum s(2);
  const auto model = QuadraticSpinModel::uniaxial(s, 1.0);
  const std::vector<CoherentPoint> grid{CoherentPoint(0.015, 0.0)};
  CHECK_THROWS_AS(closed_equation_residual(model, Matrix::Identity(3, 3), grid, 0.0, 1e-2, 1e-2), PoleSingularity);
  CHECK_THROWS_AS(closed_equation_residual(model, Matrix::Identity(3, 3), grid, 0.0, 0.0, 1e-2), InvalidArgument);
}

TEST_CASE("classical precession", "[dynamics][classical]") {
  const SpinQuantum s(10);
  const double b = 0.7;
  const auto h_cl = ClassicalSpinHamiltonian::from_quadratic(
      QuadraticSpinModel(s, Eigen::Matrix3d::Zero(), Eigen::Vector3d(0.0, 0.0, -b)));
  CHECK(h_cl.derivative_mismatch(Eigen::Vector3d(0.3, -0.5, 0.8).normalized()) < 1e-6);

  const auto times = linspace(9.0, 30);
  const auto traj = classical_trajectory(h_cl, Eigen::Vector3d(1.0, 0.0, 0.0), times, 1e-2);
  const auto ops = build_spin_operators(s);
  const auto quantum = observable_evolution(-b * ops.sz, ops.splus, CoherentPoint(pi / 2, 0.0), times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    CHECK(traj[k].n.x() == Approx(std::cos(b * times[k])).margin(1e-9));
    CHECK(traj[k].n.y() == Approx(-std::sin(b * times[k])).margin(1e-9));
    CHECK(std::abs(Complex(traj[k].n.x(), traj[k].n.y()) - quantum.values[k] / s.value()) < 1e-9);
    CHECK(traj[k].n.norm() == Approx(1.0).margin(1e-12));
  }

  const auto pole = classical_trajectory(h_cl, Eigen::Vector3d(0.0, 0.0, 1.0), times, 1e-2);
  CHECK((pole.back().n - Eigen::Vector3d(0.0, 0.0, 1.0)).norm() < 1e-14);
}

TEST_CASE("classical integrator conserves energy", "[dynamics][classical]") {
  const auto model = QuadraticSpinModel::biaxial(SpinQuantum(6), 0.5, 0.8, 0.3);
  const auto h_cl = ClassicalSpinHamiltonian::from_quadratic(model);
  const Eigen::Vector3d n0 = Eigen::Vector3d(0.4, 0.5, 0.7).normalized();
  const auto times = linspace(5.0, 10);
  const auto traj = classical_trajectory(h_cl, n0, times, 1e-3);
  for (const auto& state : traj)
    CHECK(std::abs(h_cl.value(state.n) - h_cl.value(n0)) <= 1e-8 * std::max(state.t, 1e-12) * std::abs(h_cl.value(n0)) + 1e-12);
  CHECK_THROWS_AS(classical_trajectory(h_cl, n0, times, 0.8), StepTooLarge);
  CHECK_THROWS_AS(classical_trajectory(h_cl, n0, times, 0.0), InvalidArgument);
  CHECK_THROWS_AS(classical_trajectory(h_cl, n0, std::vector<double>{1.0, 0.5}, 1e-2), InvalidArgument);
}

TEST_CASE("quantum twisting approaches the classical trajectory as S grows", "[dynamics][classical]") {
  const double b = 1.0, d0 = 0.5, theta = 1.0;
  const auto times = linspace(4.0, 40);
  double previous = INFINITY;
  for (int two_s : {20, 40, 80}) {
    const SpinQuantum s(two_s);
    const TwistingModel m{s, b, d0 / s.value()};
    const auto quantum = twisting_expectation(m, CoherentPoint(theta, 0.0), times);
    const auto h_cl = ClassicalSpinHamiltonian::from_quadratic(m.hamiltonian());
    const auto classical = classical_trajectory(h_cl, CoherentPoint(theta, 0.0).n(), times, 1e-3);
    double deviation = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k)
      deviation = std::max(deviation, std::abs(quantum[k] / s.value() - Complex(classical[k].n.x(), classical[k].n.y())));
    CHECK(deviation < previous);
    previous = deviation;
  }
  CHECK(previous < 0.1);
}
