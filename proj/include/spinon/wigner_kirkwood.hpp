#pragma once

// Classical spin thermodynamics on the sphere and the first quantum
// correction to the free energy,
//   dF = (1/(4S)) < sum_kl (delta_kl - n_k n_l) (f_kl - f_k f_l / T) >,
// where < > is the classical Gibbs average with measure (2S+1)/(4 pi) dOmega.

#include <span>
#include <string>
#include <vector>

#include "spinon/classical_spin.hpp"
#include "spinon/linalg.hpp"
#include "spinon/quadrature.hpp"
#include "spinon/spin_algebra.hpp"

namespace spinon::wk {

/// -T ln sum_k exp(-E_k / T), shifted by the ground energy.
double quantum_free_energy(std::span<const double> energies, double temperature);
double quantum_free_energy(const Matrix& h, double temperature);

/// F_cl and dF from one pass over the quadrature nodes.
struct ClassicalThermodynamics {
  double free_energy = 0.0;
  double correction = 0.0;
  int n_u = 0;
};

ClassicalThermodynamics classical_thermodynamics(const ClassicalSpinHamiltonian& h, double temperature,
                                                 const SphereQuadrature& quad);

/// F_cl = -T ln[(2S+1)/(4 pi) int dOmega exp(-f(S n)/T)].
double classical_free_energy(const ClassicalSpinHamiltonian& h, double temperature, const SphereQuadrature& quad);

double wk_correction(const ClassicalSpinHamiltonian& h, double temperature, const SphereQuadrature& quad);

/// Doubles n_u (with n_phi = 2 n_u) from `start_n_u` until both F_cl and dF
/// move by at most `tolerance`; throws QuadratureUnconverged past max_n_u.
ClassicalThermodynamics converged_classical_thermodynamics(const ClassicalSpinHamiltonian& h,
                                                           double temperature, double tolerance = 1e-9,
                                                           int start_n_u = 16, int max_n_u = 1024);

enum class Preset { zeeman, uniaxial };

Preset parse_preset(const std::string& name);
const char* to_string(Preset preset);

/// Couplings scaled so f(S n) does not depend on S:
///   zeeman:   H = -(b/S) S_z,                       f = -b n_z
///   uniaxial: H = -(k/S^2) S_z^2 - (b/S) S_x,       f = -k n_z^2 - b n_x
QuadraticSpinModel preset_model(Preset preset, SpinQuantum s, double field, double anisotropy = 1.0);

struct FreeEnergyReport {
  double s_value = 0.0;
  double temperature = 0.0;
  double f_quantum = 0.0;
  double f_classical = 0.0;
  double delta_f = 0.0;
  double residual = 0.0;  // f_quantum - f_classical - delta_f
};

FreeEnergyReport free_energy_report(const QuadraticSpinModel& model, double temperature, double tolerance = 1e-9);

struct ConvergenceTable {
  std::vector<FreeEnergyReport> rows;
  /// Between consecutive rows: |gap_i| / |gap_{i+1}| and log of that over log(S_{i+1}/S_i).
  std::vector<double> gap_ratios;
  std::vector<double> residual_ratios;
  std::vector<double> gap_exponents;
  std::vector<double> residual_exponents;
};

ConvergenceTable wk_convergence(Preset preset, std::span<const double> s_list, double temperature,
                                double field, double anisotropy = 1.0);

}  // namespace spinon::wk
