#pragma once

// Spin operators acting on normalized coherent-state symbols as differential
// operators on the sphere:
//   <n|S_i F|n> = (S n_i + (a_i - i b_i) / 2) f,   b = n x grad, a = -n x b,
// with tangential derivatives taken by central differences of step h in the
// (theta, phi) chart. Truncation error is O(h^2).

#include <functional>

#include "spinon/linalg.hpp"
#include "spinon/spin_algebra.hpp"

namespace spinon {

using SphereFunction = std::function<Complex(const CoherentPoint&)>;

/// Applies the sphere representation of S_axis to f at one point.
/// Throws PoleSingularity if theta < h or theta > pi - h.
Complex apply_sphere_representation(SpinQuantum s, Axis axis, const SphereFunction& f,
                                    const CoherentPoint& point, double h);

/// The same operator as a new sphere function, for nesting (S_i S_j f).
SphereFunction sphere_operator(SpinQuantum s, Axis axis, SphereFunction f, double h);

/// H(S-hat) f for a quadratic model: sum a_ij S_i(S_j f) + sum b_i S_i f.
Complex apply_hamiltonian_sphere(const QuadraticSpinModel& model, const SphereFunction& f,
                                 const CoherentPoint& point, double h);

}  // namespace spinon
