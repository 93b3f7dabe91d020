#include "spinon/spin_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinon/errors.hpp"

namespace spinon {

SpinQuantum::SpinQuantum(int two_s) : two_s_(two_s) {
  if (two_s < 0) throw InvalidArgument("SpinQuantum: 2S must be nonnegative");
}

SpinQuantum SpinQuantum::from_value(double s) {
  const double twice = 2.0 * s;
  const double rounded = std::round(twice);
  if (!(s >= 0.0) || std::abs(twice - rounded) > 1e-12)
    throw InvalidArgument("spin must be a nonnegative half-integer, got " + std::to_string(s));
  return SpinQuantum(static_cast<int>(rounded));
}

const Matrix& SpinOperatorSet::operator[](Axis axis) const {
  switch (axis) {
    case Axis::x: return sx;
    case Axis::y: return sy;
    case Axis::z: break;
  }
  return sz;
}

const Matrix& SpinOperatorSet::operator[](SpinComponent c) const {
  switch (c) {
    case SpinComponent::x: return sx;
    case SpinComponent::y: return sy;
    case SpinComponent::z: return sz;
    case SpinComponent::plus: return splus;
    case SpinComponent::minus: break;
  }
  return sminus;
}

SpinOperatorSet build_spin_operators(SpinQuantum s) {
  const int n = s.dim();
  const double spin = s.value();
  SpinOperatorSet ops{s, {}, {}, Matrix::Zero(n, n), Matrix::Zero(n, n), {}};
  for (int k = 0; k < n; ++k) {
    const double sigma = s.sigma(k);
    ops.sz(k, k) = sigma;
    if (k > 0) ops.splus(k - 1, k) = std::sqrt((spin - sigma) * (spin + sigma + 1.0));
  }
  ops.sminus = ops.splus.adjoint();
  ops.sx = 0.5 * (ops.splus + ops.sminus);
  ops.sy = Complex(0.0, -0.5) * (ops.splus - ops.sminus);
  return ops;
}

double coherent_weight(SpinQuantum s, int k) {
  const int n = s.two_s();
  double binom = 1.0;
  for (int i = 1; i <= k; ++i) binom = binom * static_cast<double>(n - k + i) / i;
  return std::sqrt(binom);
}

QuadraticSpinModel::QuadraticSpinModel(SpinQuantum s, const Eigen::Matrix3d& a,
                                       const Eigen::Vector3d& b)
    : s_(s), a_(0.5 * (a + a.transpose())), b_(b) {}

QuadraticSpinModel QuadraticSpinModel::uniaxial(SpinQuantum s, double b_field) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  a(2, 2) = -1.0;
  return {s, a, Eigen::Vector3d(-b_field, 0.0, 0.0)};
}

QuadraticSpinModel QuadraticSpinModel::biaxial(SpinQuantum s, double alpha, double beta,
                                               double b_field) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  a(2, 2) = alpha;
  a(1, 1) = -beta;
  return {s, a, Eigen::Vector3d(b_field, 0.0, 0.0)};
}

QuadraticSpinModel QuadraticSpinModel::twisting(SpinQuantum s, double b_field, double d) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  a(2, 2) = -d;
  return {s, a, Eigen::Vector3d(0.0, 0.0, -b_field)};
}

Matrix build_quadratic_hamiltonian(const QuadraticSpinModel& m, const SpinOperatorSet& ops) {
  const std::array<const Matrix*, 3> comp{&ops.sx, &ops.sy, &ops.sz};
  const int n = m.spin().dim();
  Matrix h = Matrix::Zero(n, n);
  for (int i = 0; i < 3; ++i) {
    if (m.linear()(i) != 0.0) h += m.linear()(i) * *comp[i];
    for (int j = 0; j < 3; ++j)
      if (m.quadratic()(i, j) != 0.0) h += m.quadratic()(i, j) * (*comp[i] * *comp[j]);
  }
  return h;
}

Matrix build_quadratic_hamiltonian(const QuadraticSpinModel& m) {
  return build_quadratic_hamiltonian(m, build_spin_operators(m.spin()));
}

CoherentPoint::CoherentPoint(double theta, double phi) : theta_(theta) {
  if (!(theta >= -1e-15 && theta <= std::numbers::pi + 1e-15))
    throw InvalidArgument("CoherentPoint: theta must lie in [0, pi]");
  theta_ = std::clamp(theta, 0.0, std::numbers::pi);
  const double two_pi = 2.0 * std::numbers::pi;
  phi_ = std::fmod(phi, two_pi);
  if (phi_ < 0.0) phi_ += two_pi;
  if (phi_ >= two_pi) phi_ = 0.0;
}

CoherentPoint CoherentPoint::from_unit_vector(const Eigen::Vector3d& n) {
  const Eigen::Vector3d u = n.normalized();
  return {std::acos(std::clamp(u.z(), -1.0, 1.0)), std::atan2(u.y(), u.x())};
}

Complex CoherentPoint::xi() const {
  if (theta_ == std::numbers::pi) throw PoleSingularity("xi is infinite at theta = pi");
  return std::tan(0.5 * theta_) * std::exp(Complex(0.0, phi_));
}

Eigen::Vector3d CoherentPoint::n() const {
  return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
}

Eigen::Vector3d CoherentPoint::e_theta() const {
  return {std::cos(theta_) * std::cos(phi_), std::cos(theta_) * std::sin(phi_), -std::sin(theta_)};
}

Eigen::Vector3d CoherentPoint::e_phi() const { return {-std::sin(phi_), std::cos(phi_), 0.0}; }

Vector coherent_state(SpinQuantum s, const CoherentPoint& point, bool normalized) {
  if (!normalized) return coherent_state_xi(s, point.xi());
  const int n = s.dim();
  const double c = std::cos(0.5 * point.theta());
  const double sn = std::sin(0.5 * point.theta());
  Vector v(n);
  for (int k = 0; k < n; ++k) {
    const double amp = coherent_weight(s, k) * std::pow(c, s.two_s() - k) * std::pow(sn, k);
    v(k) = amp * std::exp(Complex(0.0, k * point.phi()));
  }
  return v;
}

Vector coherent_state_xi(SpinQuantum s, Complex xi) {
  const int n = s.dim();
  Vector v(n);
  Complex power = 1.0;
  for (int k = 0; k < n; ++k) {
    v(k) = coherent_weight(s, k) * power;
    power *= xi;
  }
  return v;
}

Complex covariant_symbol(const Matrix& a, const CoherentPoint& point) {
  const SpinQuantum s(static_cast<int>(a.rows()) - 1);
  const Vector v = coherent_state(s, point, true);
  return v.dot(a * v);
}

Matrix wigner_rotation(const SpinOperatorSet& ops, Axis axis, double angle) {
  return propagator(hermitian_eigensystem(ops[axis]), angle);
}

Matrix rotate_operator(const SpinOperatorSet& ops, const Matrix& a, Axis axis, double angle) {
  const Matrix r = wigner_rotation(ops, axis, angle);
  return r * a * r.adjoint();
}

}  // namespace spinon
