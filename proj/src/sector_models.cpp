#include "spinon/sector_models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinon/errors.hpp"

namespace spinon::sector {

namespace {

// Raising factor <sigma+1|S_+|sigma> = <sigma|S_-|sigma+1>.
double ladder(double spin, double sigma) { return std::sqrt((spin - sigma) * (spin + sigma + 1.0)); }

}  // namespace

SymmetricTridiagonal dicke_sector_matrix(const DickeModel& m, double r, std::vector<std::array<int, 2>>* basis) {
  const double spin = m.s.value();
  const double excitations = r + spin;
  const double rounded = std::round(excitations);
  if (std::abs(excitations - rounded) > 1e-9 || rounded < 0.0)
    throw EmptySector("dicke_sector: r + S must be a nonnegative integer, r = " + std::to_string(r));

  // n + sigma = r with n >= 0 and |sigma| <= S, ordered by increasing n.
  const int k_total = static_cast<int>(rounded);  // n + (S + sigma)
  std::vector<std::array<int, 2>> states;
  for (int n = std::max(0, k_total - m.s.two_s()); n <= k_total; ++n) {
    const int two_sigma = 2 * (k_total - n) - m.s.two_s();
    states.push_back({n, two_sigma});
  }
  if (states.empty()) throw EmptySector("dicke_sector: no basis states");

  SymmetricTridiagonal t;
  for (const auto& [n, two_sigma] : states) t.diagonal.push_back(m.omega * n + m.epsilon * 0.5 * two_sigma);
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    // (n, sigma) -> (n + 1, sigma - 1) through a^+ S_-.
    const int n = states[i][0];
    const double sigma = 0.5 * states[i][1];
    t.off_diagonal.push_back(-m.g * std::sqrt(n + 1.0) * ladder(spin, sigma - 1.0));
  }
  if (basis != nullptr) *basis = std::move(states);
  return t;
}

SectorSpectrum dicke_sector(const DickeModel& m, double r) {
  SectorSpectrum out;
  out.label = r;
  const SymmetricTridiagonal t = dicke_sector_matrix(m, r, &out.basis);
  out.eigenvalues = tridiagonal_eigenvalues(t);
  return out;
}

Matrix dicke_truncated_hamiltonian(const DickeModel& m, int n_max) {
  if (n_max < 1) throw InvalidArgument("dicke_truncated_hamiltonian: n_max must be >= 1");
  const SpinOperatorSet ops = build_spin_operators(m.s);
  const int d = m.s.dim();
  const int dim = (n_max + 1) * d;
  Matrix h = Matrix::Zero(dim, dim);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k < d; ++k) {
      const int row = n * d + k;
      h(row, row) = m.omega * n + m.epsilon * m.s.sigma(k);
      if (n == n_max) continue;
      // -g a^+ S_-: (n, k) -> (n + 1, k')
      for (int kp = 0; kp < d; ++kp) {
        const Complex element = ops.sminus(kp, k);
        if (element == Complex(0.0)) continue;
        const int col = (n + 1) * d + kp;
        h(col, row) += -m.g * std::sqrt(n + 1.0) * element;
        h(row, col) += std::conj(-m.g * std::sqrt(n + 1.0) * element);
      }
    }
  }
  return h;
}

Matrix dicke_excitation_operator(SpinQuantum s, int n_max) {
  const int d = s.dim();
  const int dim = (n_max + 1) * d;
  Matrix out = Matrix::Zero(dim, dim);
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k < d; ++k) out(n * d + k, n * d + k) = n + s.sigma(k);
  return out;
}

std::vector<double> dicke_truncated_full(const DickeModel& m, int n_max) {
  const RealVector values = hermitian_eigenvalues(dicke_truncated_hamiltonian(m, n_max));
  return {values.data(), values.data() + values.size()};
}

double dicke_safe_window(const DickeModel& m, int n_max) { return 0.5 * m.omega * n_max; }

SymmetricTridiagonal two_oscillator_sector_matrix(const TwoOscillatorModel& m, int big_n,
                                                  std::vector<std::array<int, 2>>* basis) {
  if (big_n < 0) throw EmptySector("two_oscillator_sector: N must be nonnegative");
  std::vector<std::array<int, 2>> states;
  for (int na = 0; 2 * na <= big_n; ++na) states.push_back({na, big_n - 2 * na});

  SymmetricTridiagonal t;
  for (const auto& [na, nb] : states) t.diagonal.push_back(m.omega * na + m.capital_omega * nb);
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    // <n_a+1, n_b-2| a^+ b^2 |n_a, n_b> = sqrt(n_a+1) sqrt(n_b (n_b-1))
    const double na = states[i][0];
    const double nb = states[i][1];
    t.off_diagonal.push_back(m.g * std::sqrt(na + 1.0) * std::sqrt(nb * (nb - 1.0)));
  }
  if (basis != nullptr) *basis = std::move(states);
  return t;
}

SectorSpectrum two_oscillator_sector(const TwoOscillatorModel& m, int big_n) {
  SectorSpectrum out;
  out.label = big_n;
  out.eigenvalues = tridiagonal_eigenvalues(two_oscillator_sector_matrix(m, big_n, &out.basis));
  return out;
}

Matrix two_oscillator_truncated_hamiltonian(const TwoOscillatorModel& m, int na_max, int nb_max) {
  const int stride = nb_max + 1;
  const int dim = (na_max + 1) * stride;
  Matrix h = Matrix::Zero(dim, dim);
  for (int na = 0; na <= na_max; ++na) {
    for (int nb = 0; nb <= nb_max; ++nb) {
      const int from = na * stride + nb;
      h(from, from) = m.omega * na + m.capital_omega * nb;
      if (na < na_max && nb >= 2) {
        const int to = (na + 1) * stride + (nb - 2);
        const double element = m.g * std::sqrt(na + 1.0) * std::sqrt(nb * (nb - 1.0));
        h(to, from) += element;
        h(from, to) += element;
      }
    }
  }
  return h;
}

Matrix two_oscillator_conserved_operator(int na_max, int nb_max) {
  const int stride = nb_max + 1;
  const int dim = (na_max + 1) * stride;
  Matrix out = Matrix::Zero(dim, dim);
  for (int na = 0; na <= na_max; ++na)
    for (int nb = 0; nb <= nb_max; ++nb) out(na * stride + nb, na * stride + nb) = 2.0 * na + nb;
  return out;
}

}  // namespace spinon::sector
