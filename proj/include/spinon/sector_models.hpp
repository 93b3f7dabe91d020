#pragma once

// Models whose infinite Hilbert space splits into finite blocks labeled by an
// integral of motion:
//   Dicke:          H = w a^+a + eps S_z - g (a^+ S_- + S_+ a),   r = n + sigma
//   two oscillators: H = w a^+a + W b^+b + g (a^+ b^2 + a b^+2),  N = 2 n_a + n_b

#include <array>
#include <vector>

#include "spinon/linalg.hpp"
#include "spinon/spin_algebra.hpp"
#include "spinon/tridiagonal.hpp"

namespace spinon::sector {

struct DickeModel {
  double omega = 1.0;
  double epsilon = 1.0;
  double g = 0.0;
  SpinQuantum s{1};
};

struct TwoOscillatorModel {
  double omega = 1.0;
  double capital_omega = 1.0;
  double g = 0.0;
};

struct SectorSpectrum {
  /// Value of the conserved quantity (r for Dicke, N for the oscillators).
  double label = 0.0;
  /// Dicke: (n, 2 sigma). Oscillators: (n_a, n_b).
  std::vector<std::array<int, 2>> basis;
  std::vector<double> eigenvalues;
};

/// Sector matrix in the basis ordered by increasing boson number n.
SymmetricTridiagonal dicke_sector_matrix(const DickeModel& m, double r,
                                         std::vector<std::array<int, 2>>* basis = nullptr);

/// Throws EmptySector when r + S is not a nonnegative integer.
SectorSpectrum dicke_sector(const DickeModel& m, double r);

/// Hamiltonian on the product space n = 0..n_max times spin; index n (2S+1) + k.
Matrix dicke_truncated_hamiltonian(const DickeModel& m, int n_max);
/// a^+a + S_z on the same truncation.
Matrix dicke_excitation_operator(SpinQuantum s, int n_max);
std::vector<double> dicke_truncated_full(const DickeModel& m, int n_max);
/// Levels of the truncated model are trusted below omega n_max / 2.
double dicke_safe_window(const DickeModel& m, int n_max);

SymmetricTridiagonal two_oscillator_sector_matrix(const TwoOscillatorModel& m, int big_n,
                                                  std::vector<std::array<int, 2>>* basis = nullptr);
SectorSpectrum two_oscillator_sector(const TwoOscillatorModel& m, int big_n);

/// Truncation n_a <= na_max, n_b <= nb_max; index n_a (nb_max + 1) + n_b.
Matrix two_oscillator_truncated_hamiltonian(const TwoOscillatorModel& m, int na_max, int nb_max);
Matrix two_oscillator_conserved_operator(int na_max, int nb_max);

}  // namespace spinon::sector
