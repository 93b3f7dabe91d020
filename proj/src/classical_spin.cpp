#include "spinon/classical_spin.hpp"

#include <algorithm>
#include <cmath>

namespace spinon {

ClassicalSpinHamiltonian::ClassicalSpinHamiltonian(double spin_length, Value value, Gradient gradient,
                                                   Hessian hessian)
    : spin_length_(spin_length),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)) {}

ClassicalSpinHamiltonian ClassicalSpinHamiltonian::from_quadratic(const QuadraticSpinModel& m) {
  const double s = m.spin().value();
  const Eigen::Matrix3d a = m.quadratic();
  const Eigen::Vector3d b = m.linear();
  return {s, [=](const Eigen::Vector3d& n) { return s * s * n.dot(a * n) + s * b.dot(n); },
          [=](const Eigen::Vector3d& n) -> Eigen::Vector3d { return 2.0 * s * s * (a * n) + s * b; },
          [=](const Eigen::Vector3d&) -> Eigen::Matrix3d { return 2.0 * s * s * a; }};
}

double ClassicalSpinHamiltonian::derivative_mismatch(const Eigen::Vector3d& n, double step) const {
  const Eigen::Vector3d grad = gradient(n);
  const Eigen::Matrix3d hess = hessian(n);
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d e = Eigen::Vector3d::Unit(k) * step;
    const double fd_grad = (value(n + e) - value(n - e)) / (2.0 * step);
    worst = std::max(worst, std::abs(fd_grad - grad(k)) / std::max(1.0, std::abs(grad(k))));
    const Eigen::Vector3d fd_hess = (gradient(n + e) - gradient(n - e)) / (2.0 * step);
    for (int l = 0; l < 3; ++l)
      worst = std::max(worst, std::abs(fd_hess(l) - hess(l, k)) / std::max(1.0, std::abs(hess(l, k))));
  }
  return worst;
}

}  // namespace spinon
