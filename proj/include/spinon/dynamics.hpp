#pragma once

// Observable dynamics in the coherent-state picture. The symbol
// g(n, t) = <n| e^{iHt} G e^{-iHt} |n> obeys the closed equation
//   dg/dt = i (H(S-hat) g - conj(H(S-hat) conj(g))),
// which is checked here against exact matrix evolution. hbar = 1.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinon/classical_spin.hpp"
#include "spinon/linalg.hpp"
#include "spinon/spin_algebra.hpp"

namespace spinon::dyn {

struct ObservableTrajectory {
  CoherentPoint point;
  std::vector<double> times;
  std::vector<Complex> values;
};

/// Heisenberg-picture operators G(t) = e^{iHt} G e^{-iHt}.
class HeisenbergEvolution {
 public:
  explicit HeisenbergEvolution(const Matrix& h);

  Matrix evolve_operator(const Matrix& g, double t) const;
  const Eigensystem& eigensystem() const { return eig_; }

 private:
  Eigensystem eig_;
};

ObservableTrajectory observable_evolution(const Matrix& h, const Matrix& g, const CoherentPoint& point,
                                          std::span<const double> times);

/// Gauss-Legendre latitudes times uniform longitudes; poles are never nodes.
std::vector<CoherentPoint> residual_sphere_grid(int n_latitudes, int n_longitudes);

struct ResidualReport {
  double max = 0.0;
  double mean = 0.0;
  double h = 0.0;
  double dt = 0.0;
  std::vector<Complex> residuals;  // signed complex residual per grid point
};

/// Residual of the closed equation at time t. dg/dt uses a central
/// difference of step dt; H(S-hat) uses nested sphere differences of step h.
/// Throws PoleSingularity if a grid point is closer than 2h to a pole.
ResidualReport closed_equation_residual(const QuadraticSpinModel& h, const Matrix& g,
                                        std::span<const CoherentPoint> grid, double t, double h_step,
                                        double dt);

/// H = -B S_z - D S_z^2.
struct TwistingModel {
  SpinQuantum s;
  double b = 0.0;
  double d = 0.0;

  double omega() const { return b; }
  double tau(double t) const { return d * t; }
  /// D S << B, where the modulation is usually quoted; the closed form does not need it.
  bool weak_twisting() const { return d * s.value() < 0.1 * std::abs(b); }
  QuadraticSpinModel hamiltonian() const { return QuadraticSpinModel::twisting(s, b, d); }
};

/// Sign inside the modulation bracket (cos tau + sign i sin tau cos theta),
/// fixed by exact evolution under H = -B S_z - D S_z^2.
inline constexpr int kTwistingBracketSign = -1;

/// <S_+>(t) = S sin(theta) e^{i(phi - B t)} (cos tau - i sin tau cos theta)^{2S-1}.
std::vector<Complex> twisting_expectation(const TwistingModel& m, const CoherentPoint& point,
                                          std::span<const double> times);

/// Orientation of classical precession: dn/dt = sign * n x dH/dm with m = S n.
inline constexpr int kPrecessionSign = -1;

struct ClassicalSpinState {
  double t = 0.0;
  Eigen::Vector3d n;
};

/// RK4 with per-step renormalization of |n|. Throws StepTooLarge when the
/// energy drift per unit time exceeds 1e-8 times the energy scale.
std::vector<ClassicalSpinState> classical_trajectory(const ClassicalSpinHamiltonian& h_cl,
                                                     const Eigen::Vector3d& n0, std::span<const double> times,
                                                     double dt);

}  // namespace spinon::dyn
