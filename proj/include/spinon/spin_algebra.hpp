#pragma once

// Finite spin-S representation.
//
// Basis convention: row/column k of every matrix is the S_z eigenstate
// |sigma = S - k>, i.e. the ordering is sigma = S, S-1, ..., -S and row 0 is
// the north-pole state |S>. hbar = 1 everywhere.

#include <array>

#include <Eigen/Dense>

#include "spinon/linalg.hpp"

namespace spinon {

/// Spin length stored as the integer 2S.
class SpinQuantum {
 public:
  explicit SpinQuantum(int two_s);

  /// Accepts 0, 0.5, 1, 1.5, ...; throws InvalidArgument otherwise.
  static SpinQuantum from_value(double s);

  int two_s() const { return two_s_; }
  int dim() const { return two_s_ + 1; }
  double value() const { return 0.5 * two_s_; }
  /// Magnetic quantum number of basis index k.
  double sigma(int k) const { return value() - k; }

  friend bool operator==(SpinQuantum, SpinQuantum) = default;

 private:
  int two_s_;
};

enum class Axis { x, y, z };
enum class SpinComponent { x, y, z, plus, minus };

struct SpinOperatorSet {
  SpinQuantum s;
  Matrix sx, sy, sz, splus, sminus;

  const Matrix& operator[](Axis axis) const;
  const Matrix& operator[](SpinComponent c) const;
};

SpinOperatorSet build_spin_operators(SpinQuantum s);

/// sqrt((2S)! / ((S - sigma)! (S + sigma)!)) for basis index k = S - sigma.
double coherent_weight(SpinQuantum s, int k);

/// H = sum_ij a_ij S_i S_j + sum_i b_i S_i. `a` is symmetrized on construction.
class QuadraticSpinModel {
 public:
  QuadraticSpinModel(SpinQuantum s, const Eigen::Matrix3d& a, const Eigen::Vector3d& b);

  /// -S_z^2 - B S_x.
  static QuadraticSpinModel uniaxial(SpinQuantum s, double b_field);
  /// alpha S_z^2 - beta S_y^2 + B S_x.
  static QuadraticSpinModel biaxial(SpinQuantum s, double alpha, double beta, double b_field);
  /// -B S_z - D S_z^2 (one-axis twisting about the quantization axis).
  static QuadraticSpinModel twisting(SpinQuantum s, double b_field, double d);

  SpinQuantum spin() const { return s_; }
  const Eigen::Matrix3d& quadratic() const { return a_; }
  const Eigen::Vector3d& linear() const { return b_; }

 private:
  SpinQuantum s_;
  Eigen::Matrix3d a_;
  Eigen::Vector3d b_;
};

Matrix build_quadratic_hamiltonian(const QuadraticSpinModel& m);
Matrix build_quadratic_hamiltonian(const QuadraticSpinModel& m, const SpinOperatorSet& ops);

/// Point on the unit sphere, xi = tan(theta/2) e^{i phi}.
class CoherentPoint {
 public:
  /// theta in [0, pi]; phi is wrapped into [0, 2 pi).
  CoherentPoint(double theta, double phi);

  static CoherentPoint from_unit_vector(const Eigen::Vector3d& n);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  /// Throws PoleSingularity at theta = pi where xi is infinite.
  Complex xi() const;
  Eigen::Vector3d n() const;
  /// Tangent basis e_theta, e_phi.
  Eigen::Vector3d e_theta() const;
  Eigen::Vector3d e_phi() const;

 private:
  double theta_;
  double phi_;
};

/// Components sqrt(C_sigma) xi^{S-sigma}, times (1 + |xi|^2)^{-S} when
/// normalized. The normalized state is evaluated in the angle form, so
/// theta = pi gives the |-S> limit (with phase e^{2iS phi}).
Vector coherent_state(SpinQuantum s, const CoherentPoint& point, bool normalized);

/// Unnormalized |xi> = exp(xi S_-)|S> for finite complex xi.
Vector coherent_state_xi(SpinQuantum s, Complex xi);

/// <n|A|n> in the normalized coherent state.
Complex covariant_symbol(const Matrix& a, const CoherentPoint& point);

/// exp(-i angle S_axis).
Matrix wigner_rotation(const SpinOperatorSet& ops, Axis axis, double angle);

/// R A R^H with R = exp(-i angle S_axis); moves symbols away from chart poles.
Matrix rotate_operator(const SpinOperatorSet& ops, const Matrix& a, Axis axis, double angle);

}  // namespace spinon
