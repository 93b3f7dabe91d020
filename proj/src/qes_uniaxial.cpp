#include "spinon/qes_uniaxial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spinon/errors.hpp"

namespace spinon::qes {

UniaxialModel::UniaxialModel(SpinQuantum s, double b_field) : s_(s), b_(b_field) {
  if (!(b_field > 0.0)) throw InvalidArgument("UniaxialModel: transverse field B must be positive");
}

SymmetricTridiagonal uniaxial_tridiagonal(SpinQuantum s, double b_field) {
  const int n = s.dim();
  const double spin = s.value();
  SymmetricTridiagonal t;
  t.diagonal.resize(static_cast<std::size_t>(n));
  t.off_diagonal.resize(static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n; ++k) {
    const double sigma = s.sigma(k);
    t.diagonal[static_cast<std::size_t>(k)] = -sigma * sigma;
    if (k > 0)
      t.off_diagonal[static_cast<std::size_t>(k - 1)] =
          -0.5 * b_field * std::sqrt((spin - sigma) * (spin + sigma + 1.0));
  }
  return t;
}

std::vector<double> uniaxial_spin_spectrum(const UniaxialModel& m) {
  return tridiagonal_eigenvalues(uniaxial_tridiagonal(m.spin(), m.b_field()));
}

double uniaxial_ground_energy(SpinQuantum s, double b_field) {
  return tridiagonal_eigenvalues(uniaxial_tridiagonal(s, b_field), 0, 1).front();
}

double EffectivePotential::operator()(double x) const {
  const double sh = std::sinh(x);
  return 0.25 * b_ * b_ * sh * sh - b_ * (s_ + 0.5) * std::cosh(x);
}

EffectivePotential effective_potential(const UniaxialModel& m) {
  return {m.spin().value(), m.b_field()};
}

const char* to_string(PotentialShape shape) {
  switch (shape) {
    case PotentialShape::single_well: return "SingleWell";
    case PotentialShape::double_well: return "DoubleWell";
    case PotentialShape::quartic_minimum: break;
  }
  return "QuarticMinimum";
}

PotentialShapeReport classify_potential(const UniaxialModel& m, double tie_tolerance) {
  if (!(tie_tolerance > 0.0)) throw InvalidArgument("classify_potential: tie tolerance must be positive");
  const double b = m.b_field();
  const double b0 = m.b0();
  PotentialShapeReport report;
  report.c0 = -b * (m.spin().value() + 0.5);
  report.c2 = 0.25 * b * (b - b0);
  report.c4 = b * b / 12.0 - b * b0 / 48.0;
  if (std::abs(b - b0) <= tie_tolerance * b0) {
    report.shape = PotentialShape::quartic_minimum;
    report.c2 = 0.0;
    report.minima = {0.0};
  } else if (b > b0) {
    report.shape = PotentialShape::single_well;
    report.minima = {0.0};
  } else {
    // U'(x) = sinh x ((B^2/2) cosh x - B (S + 1/2)) vanishes at cosh x* = B0 / B.
    const double x_star = std::acosh(b0 / b);
    report.shape = PotentialShape::double_well;
    report.minima = {-x_star, x_star};
  }
  return report;
}

SchrodingerGrid uniaxial_grid(const UniaxialModel& m, double eps_max) {
  const double b = m.b_field();
  const double lift = eps_max + 50.0 + b * (m.spin().value() + 0.5);
  const double x_max = std::acosh(1.0 + 4.0 * std::max(lift, 0.0) / (b * b));
  return SchrodingerGrid::with_spacing(x_max, std::min(0.005 * x_max, 2e-3));
}

CorrespondenceReport verify_correspondence(const UniaxialModel& m, const SchrodingerGrid& grid,
                                           const SchrodingerOptions& options) {
  const int levels = m.spin().dim();
  CorrespondenceReport report;
  report.grid = grid;
  report.spin_levels = uniaxial_spin_spectrum(m);

  const SchrodingerSolution sol = solve_schrodinger(effective_potential(m), grid, levels + 1, options);
  report.schrodinger_levels.assign(sol.eigenvalues.begin(), sol.eigenvalues.begin() + levels);
  report.next_level = sol.eigenvalues.back();
  report.coarse_spacing = sol.coarse_spacing;
  report.fine_spacing = sol.fine_spacing;
  report.max_shift = sol.max_shift;

  const auto& e = report.spin_levels;
  const auto& eps = report.schrodinger_levels;
  const double n = levels;
  if (levels == 1) {
    report.fitted_slope = 1.0;
    report.fitted_offset = eps[0] - e[0];
  } else {
    double se = 0.0, seps = 0.0, see = 0.0, seeps = 0.0;
    for (int k = 0; k < levels; ++k) {
      se += e[static_cast<std::size_t>(k)];
      seps += eps[static_cast<std::size_t>(k)];
    }
    const double mean_e = se / n;
    const double mean_eps = seps / n;
    for (int k = 0; k < levels; ++k) {
      const double de = e[static_cast<std::size_t>(k)] - mean_e;
      see += de * de;
      seeps += de * (eps[static_cast<std::size_t>(k)] - mean_eps);
    }
    report.fitted_slope = seeps / see;
    report.fitted_offset = mean_eps - report.fitted_slope * mean_e;
  }

  const double sign = report.fitted_slope >= 0.0 ? 1.0 : -1.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double gap = lo;
  for (int k = 0; k < levels; ++k) {
    const double offset = eps[static_cast<std::size_t>(k)] - sign * e[static_cast<std::size_t>(k)];
    report.per_level_offsets.push_back(offset);
    lo = std::min(lo, offset);
    hi = std::max(hi, offset);
    const double image = report.fitted_slope * e[static_cast<std::size_t>(k)] + report.fitted_offset;
    gap = std::min(gap, std::abs(report.next_level - image));
  }
  report.offset_spread = hi - lo;
  report.negative_control_gap = gap;
  return report;
}

CorrespondenceReport verify_correspondence(const UniaxialModel& m) {
  // A coarse probe locates level 2S+1 so the box walls clear it.
  const auto spin_levels = uniaxial_spin_spectrum(m);
  const EffectivePotential u = effective_potential(m);
  double eps_max = spin_levels.back() + std::max(spin_levels.back() - spin_levels.front(), m.b0());
  SchrodingerOptions probe_options;
  probe_options.shift_tolerance = std::numeric_limits<double>::infinity();
  probe_options.wall_margin = -std::numeric_limits<double>::infinity();
  double probe_shift = 0.0;
  double probe_spacing = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const SchrodingerGrid probe_grid = uniaxial_grid(m, eps_max);
    const SchrodingerGrid coarse{probe_grid.x_max, 2001};
    const auto probe = solve_schrodinger(u, coarse, m.spin().dim() + 1, probe_options);
    probe_shift = probe.max_shift;
    probe_spacing = coarse.spacing();
    const double top = probe.eigenvalues.back();
    if (top + 1.0 <= eps_max) break;
    eps_max = top + 1.0;
  }
  // The (h, h/2) shift scales as h^2; aim for a tenth of the tolerance.
  SchrodingerGrid grid = uniaxial_grid(m, eps_max);
  const double target = 0.1 * SchrodingerOptions{}.shift_tolerance;
  if (probe_shift > 0.0) {
    const double spacing = probe_spacing * std::sqrt(target / probe_shift);
    if (spacing < grid.spacing()) grid = SchrodingerGrid::with_spacing(grid.x_max, spacing);
  }
  return verify_correspondence(m, grid);
}

const char* to_string(WavefunctionWeight weight) {
  return weight == WavefunctionWeight::binomial_sqrt ? "sqrt_binomial" : "reciprocal_sqrt_binomial";
}

namespace {

struct Candidate {
  std::vector<double> psi;
  double residual = 0.0;
};

Candidate build_candidate(const UniaxialModel& m, const std::vector<double>& spin_vector, double energy,
                          const std::vector<double>& x, double h, bool reciprocal) {
  const SpinQuantum s = m.spin();
  const double b = m.b_field();
  const EffectivePotential u = effective_potential(m);
  Candidate c;
  c.psi.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double envelope = -0.5 * b * std::cosh(x[i]);
    double sum = 0.0;
    for (int k = 0; k < s.dim(); ++k) {
      const double w = coherent_weight(s, k);
      const double a = spin_vector[static_cast<std::size_t>(k)] * (reciprocal ? 1.0 / w : w);
      sum += a * std::exp(s.sigma(k) * x[i] + envelope);
    }
    c.psi[i] = sum;
  }
  double peak = 0.0;
  for (double v : c.psi) peak = std::max(peak, std::abs(v));
  if (peak > 0.0)
    for (double& v : c.psi) v /= peak;

  const double inner = 0.8 * x.back();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 2; i + 2 < x.size(); ++i) {
    if (std::abs(x[i]) > inner) continue;
    const auto& p = c.psi;
    const double second =
        (-p[i - 2] + 16.0 * p[i - 1] - 30.0 * p[i] + 16.0 * p[i + 1] - p[i + 2]) / (12.0 * h * h);
    const double r = -second + (u(x[i]) - energy) * p[i];
    num += r * r;
    den += p[i] * p[i];
  }
  c.residual = std::sqrt(num / den);
  return c;
}

}  // namespace

WavefunctionReport reconstruct_wavefunction(const UniaxialModel& m, int level, const SchrodingerGrid& grid) {
  grid.validate();
  const SpinQuantum s = m.spin();
  if (level < 0 || level >= s.dim())
    throw InvalidArgument("reconstruct_wavefunction: level must be in [0, 2S]");
  const SymmetricTridiagonal t = uniaxial_tridiagonal(s, m.b_field());
  const std::vector<double> energies = tridiagonal_eigenvalues(t);
  const auto vectors = tridiagonal_eigenvectors(t, energies);
  const double energy = energies[static_cast<std::size_t>(level)];
  const auto& v = vectors[static_cast<std::size_t>(level)];

  const double h = grid.spacing();
  std::vector<double> x(static_cast<std::size_t>(grid.n_points));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = -grid.x_max + static_cast<double>(i) * h;

  Candidate binomial = build_candidate(m, v, energy, x, h, false);
  Candidate reciprocal = build_candidate(m, v, energy, x, h, true);
  constexpr double kResidualLimit = 1e-4;
  if (binomial.residual > kResidualLimit && reciprocal.residual > kResidualLimit)
    throw ConventionMismatch("reconstruct_wavefunction: residuals " + std::to_string(binomial.residual) +
                             " and " + std::to_string(reciprocal.residual) + " both exceed 1e-4");

  WavefunctionReport report;
  report.x = std::move(x);
  report.energy = energy;
  const bool use_binomial = binomial.residual <= reciprocal.residual;
  Candidate& chosen = use_binomial ? binomial : reciprocal;
  report.weight = use_binomial ? WavefunctionWeight::binomial_sqrt : WavefunctionWeight::reciprocal;
  report.residual = chosen.residual;
  report.rejected_residual = use_binomial ? reciprocal.residual : binomial.residual;
  report.psi = std::move(chosen.psi);
  report.decay_ratio = std::max(std::abs(report.psi.front()), std::abs(report.psi.back()));
  report.nodes = count_nodes(report.psi);
  return report;
}

SusceptibilityReport susceptibility_scan(SpinQuantum s, double b_lo, double b_hi, double db) {
  const double b0 = s.two_s() + 1.0;
  if (!(db > 0.0)) throw InvalidArgument("susceptibility_scan: step must be positive");
  if (!(b_lo - 2.0 * db > 0.0) || !(b_hi > b_lo) || !(b_hi + 2.0 * db < 2.0 * b0))
    throw InvalidArgument("susceptibility_scan: B range must lie inside (0, 2 B0) with room for the stencil");

  const int count = static_cast<int>(std::floor((b_hi - b_lo) / db + 1e-9)) + 1;
  std::vector<double> energy(static_cast<std::size_t>(count + 4));
  for (int j = -2; j < count + 2; ++j)
    energy[static_cast<std::size_t>(j + 2)] = uniaxial_ground_energy(s, b_lo + j * db);

  SusceptibilityReport report;
  for (int k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k + 2);
    const double second = (-energy[i + 2] + 16.0 * energy[i + 1] - 30.0 * energy[i] + 16.0 * energy[i - 1] -
                           energy[i - 2]) / (12.0 * db * db);
    report.b_grid.push_back(b_lo + k * db);
    report.chi_values.push_back(-second);
  }

  const auto best = std::max_element(report.chi_values.begin(), report.chi_values.end());
  const auto k = static_cast<std::size_t>(best - report.chi_values.begin());
  report.b_star = report.b_grid[k];
  if (k == 0 || k + 1 == report.chi_values.size()) {
    report.boundary_maximum = true;
  } else {
    const double y0 = report.chi_values[k - 1];
    const double y1 = report.chi_values[k];
    const double y2 = report.chi_values[k + 1];
    const double curvature = y0 - 2.0 * y1 + y2;
    if (curvature < 0.0) report.b_star += 0.5 * (y0 - y2) / curvature * db;
  }
  report.gamma_estimate = (1.0 - report.b_star / b0) * std::pow(s.value() + 0.5, 2.0 / 3.0);
  return report;
}

SusceptibilityReport susceptibility_scan(SpinQuantum s, double b_lo, double b_hi) {
  return susceptibility_scan(s, b_lo, b_hi, 1e-3 * (s.two_s() + 1.0));
}

}  // namespace spinon::qes
