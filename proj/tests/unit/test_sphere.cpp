#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "spinon/errors.hpp"
#include "spinon/sphere_representation.hpp"
#include "spinon/spin_algebra.hpp"
#include "test_support.hpp"

using namespace spinon;
using Catch::Approx;
using std::numbers::pi;

namespace {

SphereFunction symbol_of(const Matrix& a) {
  return [a](const CoherentPoint& p) { return covariant_symbol(a, p); };
}

const std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

}  // namespace

TEST_CASE("constant function gives the classical part", "[sphere]") {
  const SpinQuantum s(3);
  const SphereFunction one = [](const CoherentPoint&) { return Complex(1.0); };
  for (double theta : {0.3, 1.2, 2.8}) {
    const CoherentPoint p(theta, 0.9);
    CHECK(std::abs(apply_sphere_representation(s, Axis::z, one, p, 1e-3) - s.value() * std::cos(theta)) < 1e-12);
    CHECK(std::abs(apply_sphere_representation(s, Axis::x, one, p, 1e-3) - s.value() * p.n().x()) < 1e-12);
  }
}

TEST_CASE("S_z applied to the S_z symbol", "[sphere]") {
  for (int two_s : {1, 2, 5}) {
    const SpinQuantum s(two_s);
    const auto ops = build_spin_operators(s);
    const double v = s.value();
    for (double theta : {0.5, pi / 2, 2.2}) {
      const CoherentPoint p(theta, 1.1);
      const Complex got = apply_sphere_representation(s, Axis::z, symbol_of(ops.sz), p, 1e-4);
      const double closed = v * v * std::cos(theta) * std::cos(theta) + 0.5 * v * std::sin(theta) * std::sin(theta);
      CHECK(std::abs(got - closed) < 1e-6);
      CHECK(std::abs(got - covariant_symbol(ops.sz * ops.sz, p)) < 1e-6);
    }
  }
}

TEST_CASE("sphere representation matches symbols of S_i A with second-order error", "[sphere]") {
  std::mt19937_64 rng(31);
  for (int two_s : {1, 2, 4}) {
    const SpinQuantum s(two_s);
    const auto ops = build_spin_operators(s);
    const Matrix a = test::random_hermitian(s.dim(), rng);
    const auto f = symbol_of(a);
    for (Axis axis : kAxes) {
      const CoherentPoint p(1.0, 2.0);
      const Complex exact = covariant_symbol(ops[axis] * a, p);
      const double e1 = std::abs(apply_sphere_representation(s, axis, f, p, 2e-2) - exact);
      const double e2 = std::abs(apply_sphere_representation(s, axis, f, p, 1e-2) - exact);
      CHECK(e1 < 1e-2);
      CHECK(e1 / e2 == Approx(4.0).margin(0.3));
    }
  }
}

TEST_CASE("nested operators reproduce quadratic symbols", "[sphere]") {
  const SpinQuantum s(2);
  const auto ops = build_spin_operators(s);
  std::mt19937_64 rng(8);
  const Matrix g = test::random_hermitian(s.dim(), rng);
  const auto model = QuadraticSpinModel::biaxial(s, 0.6, 1.1, 0.4);
  const Matrix h = build_quadratic_hamiltonian(model, ops);
  const CoherentPoint p(1.3, 0.7);
  const Complex exact = covariant_symbol(h * g, p);
  const Complex got = apply_hamiltonian_sphere(model, symbol_of(g), p, 1e-3);
  CHECK(std::abs(got - exact) < 1e-4);

  const auto xy = sphere_operator(s, Axis::x, sphere_operator(s, Axis::y, symbol_of(g), 1e-3), 1e-3);
  CHECK(std::abs(xy(p) - covariant_symbol(ops.sx * ops.sy * g, p)) < 1e-4);
}

TEST_CASE("points near a pole are rejected", "[sphere]") {
  const SpinQuantum s(2);
  const SphereFunction one = [](const CoherentPoint&) { return Complex(1.0); };
  CHECK_THROWS_AS(apply_sphere_representation(s, Axis::z, one, CoherentPoint(0.0, 0.0), 1e-3), PoleSingularity);
  CHECK_THROWS_AS(apply_sphere_representation(s, Axis::x, one, CoherentPoint(pi - 5e-4, 0.0), 1e-3), PoleSingularity);
  CHECK_THROWS_AS(apply_sphere_representation(s, Axis::x, one, CoherentPoint(1.0, 0.0), 0.0), InvalidArgument);
}

TEST_CASE("rotating the operator moves a polar point into the chart", "[sphere]") {
  const SpinQuantum s(2);
  const auto ops = build_spin_operators(s);
  std::mt19937_64 rng(4);
  const Matrix a = test::random_hermitian(s.dim(), rng);
  const double angle = pi / 2;
  const Matrix rotated = rotate_operator(ops, a, Axis::y, angle);
  const Matrix sz_rotated = rotate_operator(ops, ops.sz * a, Axis::y, angle);
  // The north pole of the original chart sits on the equator after rotation.
  const Complex at_pole = covariant_symbol(ops.sz * a, CoherentPoint(0.0, 0.0));
  const CoherentPoint image = CoherentPoint::from_unit_vector(Eigen::Vector3d(std::sin(angle), 0.0, std::cos(angle)));
  CHECK(std::abs(covariant_symbol(sz_rotated, image) - at_pole) < 1e-12);
  // R S_z R^H = S_x for a quarter turn about y.
  const Complex got = apply_sphere_representation(s, Axis::x, symbol_of(rotated), image, 1e-3);
  CHECK(std::abs(got - at_pole) < 1e-5);
}
