#include "spinon/sphere_representation.hpp"

#include <cmath>
#include <numbers>

#include "spinon/errors.hpp"

namespace spinon {

namespace {

int axis_index(Axis axis) {
  switch (axis) {
    case Axis::x: return 0;
    case Axis::y: return 1;
    case Axis::z: break;
  }
  return 2;
}

constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

}  // namespace

Complex apply_sphere_representation(SpinQuantum s, Axis axis, const SphereFunction& f,
                                    const CoherentPoint& point, double h) {
  if (!(h > 0.0)) throw InvalidArgument("apply_sphere_representation: step must be positive");
  const double theta = point.theta();
  const double phi = point.phi();
  if (theta < h || theta > std::numbers::pi - h)
    throw PoleSingularity("apply_sphere_representation: point within one step of a pole; rotate the chart");

  const Complex value = f(point);
  const Complex d_theta = (f(CoherentPoint(theta + h, phi)) - f(CoherentPoint(theta - h, phi))) / (2.0 * h);
  const Complex d_phi = (f(CoherentPoint(theta, phi + h)) - f(CoherentPoint(theta, phi - h))) / (2.0 * h);
  const Complex d_phi_arc = d_phi / std::sin(theta);

  const int i = axis_index(axis);
  const Eigen::Vector3d n = point.n();
  const Eigen::Vector3d et = point.e_theta();
  const Eigen::Vector3d ep = point.e_phi();
  // a f = tangential gradient; b f = n x grad f (n x e_theta = e_phi, n x e_phi = -e_theta).
  const Complex a_i = et(i) * d_theta + ep(i) * d_phi_arc;
  const Complex b_i = ep(i) * d_theta - et(i) * d_phi_arc;
  return s.value() * n(i) * value + 0.5 * (a_i - Complex(0.0, 1.0) * b_i);
}

SphereFunction sphere_operator(SpinQuantum s, Axis axis, SphereFunction f, double h) {
  return [s, axis, f = std::move(f), h](const CoherentPoint& p) {
    return apply_sphere_representation(s, axis, f, p, h);
  };
}

Complex apply_hamiltonian_sphere(const QuadraticSpinModel& model, const SphereFunction& f,
                                 const CoherentPoint& point, double h) {
  const SpinQuantum s = model.spin();
  Complex total = 0.0;
  for (Axis j : kAxes) {
    const int jj = axis_index(j);
    bool needed = model.linear()(jj) != 0.0;
    for (int i = 0; i < 3; ++i) needed = needed || model.quadratic()(i, jj) != 0.0;
    if (!needed) continue;
    const SphereFunction inner = sphere_operator(s, j, f, h);
    if (model.linear()(jj) != 0.0) total += model.linear()(jj) * inner(point);
    for (Axis i : kAxes) {
      const double coeff = model.quadratic()(axis_index(i), jj);
      if (coeff != 0.0) total += coeff * apply_sphere_representation(s, i, inner, point, h);
    }
  }
  return total;
}

}  // namespace spinon
