#pragma once

// Classical Hamiltonian function f(S n) on the sphere, with analytic
// unconstrained partial derivatives with respect to the components of n.

#include <functional>

#include <Eigen/Dense>

#include "spinon/spin_algebra.hpp"

namespace spinon {

class ClassicalSpinHamiltonian {
 public:
  using Value = std::function<double(const Eigen::Vector3d&)>;
  using Gradient = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;
  using Hessian = std::function<Eigen::Matrix3d(const Eigen::Vector3d&)>;

  ClassicalSpinHamiltonian(double spin_length, Value value, Gradient gradient, Hessian hessian);

  /// f(n) = S^2 n.a.n + S b.n for H = a_ij S_i S_j + b_i S_i.
  static ClassicalSpinHamiltonian from_quadratic(const QuadraticSpinModel& m);

  double spin_length() const { return spin_length_; }
  double value(const Eigen::Vector3d& n) const { return value_(n); }
  /// df/dn_k
  Eigen::Vector3d gradient(const Eigen::Vector3d& n) const { return gradient_(n); }
  /// d2f/dn_k dn_l
  Eigen::Matrix3d hessian(const Eigen::Vector3d& n) const { return hessian_(n); }

  /// Largest relative mismatch between the analytic derivatives and central
  /// differences of step `step` at n.
  double derivative_mismatch(const Eigen::Vector3d& n, double step = 1e-5) const;

 private:
  double spin_length_;
  Value value_;
  Gradient gradient_;
  Hessian hessian_;
};

}  // namespace spinon
