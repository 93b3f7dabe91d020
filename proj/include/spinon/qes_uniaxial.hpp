#pragma once

// Uniaxial paramagnet in a transverse field, H = -S_z^2 - B S_x, and its
// quasi-exactly-solvable partner problem -psi'' + U(x) psi = eps psi with
//   U(x) = (B^2/4) sinh^2 x - B (S + 1/2) cosh x.
// Substituting psi = Phi exp(-(B/2) cosh x), Phi = sum_sigma a_sigma e^{sigma x}
// closes the Schrödinger equation on the 2S+1 exponentials, and the
// recurrence for a_sigma is the spin eigenproblem after rescaling
// a_sigma = sqrt(C_sigma) v_sigma. Hence eps_n = E_n for n = 0..2S
// (slope 1, offset 0).

#include <vector>

#include "spinon/schrodinger.hpp"
#include "spinon/spin_algebra.hpp"
#include "spinon/tridiagonal.hpp"

namespace spinon::qes {

class UniaxialModel {
 public:
  /// Throws InvalidArgument unless b_field > 0.
  UniaxialModel(SpinQuantum s, double b_field);

  SpinQuantum spin() const { return s_; }
  double b_field() const { return b_; }
  /// Critical field B0 = 2S + 1.
  double b0() const { return s_.two_s() + 1.0; }
  QuadraticSpinModel as_quadratic() const { return QuadraticSpinModel::uniaxial(s_, b_); }

 private:
  SpinQuantum s_;
  double b_;
};

/// -S_z^2 - B S_x in the S_z basis; real symmetric tridiagonal.
SymmetricTridiagonal uniaxial_tridiagonal(SpinQuantum s, double b_field);

/// All 2S+1 eigenvalues, ascending.
std::vector<double> uniaxial_spin_spectrum(const UniaxialModel& m);

double uniaxial_ground_energy(SpinQuantum s, double b_field);

class EffectivePotential {
 public:
  EffectivePotential(double s_value, double b_field) : s_(s_value), b_(b_field) {}

  double operator()(double x) const;
  double s_value() const { return s_; }
  double b_field() const { return b_; }

 private:
  double s_;
  double b_;
};

EffectivePotential effective_potential(const UniaxialModel& m);

enum class PotentialShape { single_well, double_well, quartic_minimum };

const char* to_string(PotentialShape shape);

struct PotentialShapeReport {
  PotentialShape shape;
  std::vector<double> minima;
  // U(x) = c0 + c2 x^2 + c4 x^4 + O(x^6)
  double c0 = 0.0;
  double c2 = 0.0;
  double c4 = 0.0;
};

/// Quartic minimum when |B - B0| <= tie_tolerance * B0.
PotentialShapeReport classify_potential(const UniaxialModel& m, double tie_tolerance = 1e-9);

/// Grid for the partner problem: x_max from
///   cosh x_max = 1 + 4 (eps_max + 50 + B (S + 1/2)) / B^2,
/// spacing <= min(0.005 x_max, 2e-3).
SchrodingerGrid uniaxial_grid(const UniaxialModel& m, double eps_max);

struct CorrespondenceReport {
  std::vector<double> spin_levels;
  std::vector<double> schrodinger_levels;  // lowest 2S+1, Richardson-extrapolated
  double next_level = 0.0;                 // level 2S+1 (0-based), unrelated to the spin
  double fitted_slope = 0.0;
  double fitted_offset = 0.0;
  std::vector<double> per_level_offsets;   // eps_n - sign(slope) E_n
  double offset_spread = 0.0;
  double negative_control_gap = 0.0;
  SchrodingerGrid grid;
  double coarse_spacing = 0.0;
  double fine_spacing = 0.0;
  double max_shift = 0.0;
};

/// Solves both problems and fits eps_n = slope E_n + offset.
CorrespondenceReport verify_correspondence(const UniaxialModel& m, const SchrodingerGrid& grid,
                                           const SchrodingerOptions& options = {});

/// Uses uniaxial_grid(), enlarging x_max if the wall margin is violated and
/// refining the spacing until a coarse probe predicts an (h, h/2) shift
/// below a tenth of the default tolerance.
CorrespondenceReport verify_correspondence(const UniaxialModel& m);

enum class WavefunctionWeight { binomial_sqrt, reciprocal };

const char* to_string(WavefunctionWeight weight);

struct WavefunctionReport {
  std::vector<double> x;
  std::vector<double> psi;  // scaled so max |psi| = 1
  double energy = 0.0;
  double residual = 0.0;  // ||-psi'' + U psi - E psi|| / ||psi|| on the inner 80%
  double rejected_residual = 0.0;
  WavefunctionWeight weight = WavefunctionWeight::binomial_sqrt;
  double decay_ratio = 0.0;  // |psi(x_max)| / max |psi|
  int nodes = 0;
};

/// Psi = Phi exp(-(B/2) cosh x), Phi = sum a_sigma e^{sigma x} with
/// a_sigma = v_sigma w_sigma. Both candidate weights are tried; the one with
/// the smaller five-point operator residual wins. Throws ConventionMismatch
/// when both residuals exceed 1e-4.
WavefunctionReport reconstruct_wavefunction(const UniaxialModel& m, int level,
                                            const SchrodingerGrid& grid);

struct SusceptibilityReport {
  std::vector<double> b_grid;
  std::vector<double> chi_values;
  double b_star = 0.0;
  double gamma_estimate = 0.0;  // (1 - b_star / B0) (S + 1/2)^{2/3}
  bool boundary_maximum = false;
};

/// chi(B) = -E0''(B) by five-point central differences on the exact ground
/// energy; requires 0 < b_lo - 2 db and b_hi < 2 B0.
SusceptibilityReport susceptibility_scan(SpinQuantum s, double b_lo, double b_hi, double db);

/// Default step db = 1e-3 B0.
SusceptibilityReport susceptibility_scan(SpinQuantum s, double b_lo, double b_hi);

}  // namespace spinon::qes
