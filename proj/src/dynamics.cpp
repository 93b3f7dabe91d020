#include "spinon/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinon/errors.hpp"
#include "spinon/quadrature.hpp"
#include "spinon/sphere_representation.hpp"

namespace spinon::dyn {

HeisenbergEvolution::HeisenbergEvolution(const Matrix& h) : eig_(hermitian_eigensystem(h)) {}

Matrix HeisenbergEvolution::evolve_operator(const Matrix& g, double t) const {
  const Matrix u = propagator(eig_, t);  // e^{-iHt}
  return u.adjoint() * g * u;
}

ObservableTrajectory observable_evolution(const Matrix& h, const Matrix& g, const CoherentPoint& point,
                                          std::span<const double> times) {
  if (h.rows() != g.rows() || g.rows() != g.cols())
    throw InvalidArgument("observable_evolution: H and G must have the same dimension");
  const HeisenbergEvolution evolution(h);
  const SpinQuantum s(static_cast<int>(h.rows()) - 1);
  const Vector state = coherent_state(s, point, true);
  ObservableTrajectory traj{point, {times.begin(), times.end()}, {}};
  traj.values.reserve(times.size());
  for (double t : times) {
    const Vector moved = evolve(evolution.eigensystem(), t, state);  // e^{-iHt}|n>
    traj.values.push_back(moved.dot(g * moved));
  }
  return traj;
}

std::vector<CoherentPoint> residual_sphere_grid(int n_latitudes, int n_longitudes) {
  if (n_latitudes < 1 || n_longitudes < 1) throw InvalidArgument("residual_sphere_grid: empty grid");
  const GaussLegendreRule rule = gauss_legendre(n_latitudes);
  std::vector<CoherentPoint> grid;
  for (double u : rule.nodes)
    for (int j = 0; j < n_longitudes; ++j)
      grid.emplace_back(std::acos(u), (j + 0.5) * 2.0 * std::numbers::pi / n_longitudes);
  return grid;
}

ResidualReport closed_equation_residual(const QuadraticSpinModel& model, const Matrix& g,
                                        std::span<const CoherentPoint> grid, double t, double h_step,
                                        double dt) {
  if (!(h_step > 0.0) || !(dt > 0.0)) throw InvalidArgument("closed_equation_residual: steps must be positive");
  if (grid.empty()) throw InvalidArgument("closed_equation_residual: empty grid");
  for (const CoherentPoint& p : grid)
    if (p.theta() < 2.0 * h_step || p.theta() > std::numbers::pi - 2.0 * h_step)
      throw PoleSingularity("closed_equation_residual: grid point closer than 2h to a pole");

  const HeisenbergEvolution evolution(build_quadratic_hamiltonian(model));
  const Matrix g_now = evolution.evolve_operator(g, t);
  const Matrix g_next = evolution.evolve_operator(g, t + dt);
  const Matrix g_prev = evolution.evolve_operator(g, t - dt);

  const SphereFunction symbol = [&g_now](const CoherentPoint& p) { return covariant_symbol(g_now, p); };
  const SphereFunction symbol_conj = [&g_now](const CoherentPoint& p) {
    return std::conj(covariant_symbol(g_now, p));
  };

  ResidualReport report;
  report.h = h_step;
  report.dt = dt;
  double sum = 0.0;
  for (const CoherentPoint& p : grid) {
    const Complex dg = (covariant_symbol(g_next, p) - covariant_symbol(g_prev, p)) / (2.0 * dt);
    const Complex hg = apply_hamiltonian_sphere(model, symbol, p, h_step);
    const Complex hg_dagger = apply_hamiltonian_sphere(model, symbol_conj, p, h_step);
    const Complex r = dg - Complex(0.0, 1.0) * (hg - std::conj(hg_dagger));
    report.residuals.push_back(r);
    report.max = std::max(report.max, std::abs(r));
    sum += std::abs(r);
  }
  report.mean = sum / static_cast<double>(grid.size());
  return report;
}

std::vector<Complex> twisting_expectation(const TwistingModel& m, const CoherentPoint& point,
                                          std::span<const double> times) {
  const double spin = m.s.value();
  const double theta = point.theta();
  std::vector<Complex> out;
  out.reserve(times.size());
  for (double t : times) {
    const double tau = m.tau(t);
    const Complex bracket(std::cos(tau), kTwistingBracketSign * std::sin(tau) * std::cos(theta));
    const Complex precession = std::exp(Complex(0.0, point.phi() - m.omega() * t));
    out.push_back(spin * std::sin(theta) * precession * std::pow(bracket, m.s.two_s() - 1));
  }
  return out;
}

namespace {

Eigen::Vector3d precession_rate(const ClassicalSpinHamiltonian& h, const Eigen::Vector3d& n) {
  const Eigen::Vector3d dh_dm = h.gradient(n) / h.spin_length();
  return kPrecessionSign * n.cross(dh_dm);
}

}  // namespace

std::vector<ClassicalSpinState> classical_trajectory(const ClassicalSpinHamiltonian& h_cl,
                                                     const Eigen::Vector3d& n0, std::span<const double> times,
                                                     double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("classical_trajectory: dt must be positive");
  if (!(h_cl.spin_length() > 0.0)) throw InvalidArgument("classical_trajectory: spin length must be positive");
  Eigen::Vector3d n = n0.normalized();
  const double e0 = h_cl.value(n);
  const double scale = std::max({std::abs(e0), h_cl.gradient(n).norm(), 1e-300});

  std::vector<ClassicalSpinState> out;
  out.reserve(times.size());
  double t = 0.0;
  for (double target : times) {
    if (target < t) throw InvalidArgument("classical_trajectory: times must be ascending and >= 0");
    const double span = target - t;
    const int steps = static_cast<int>(std::ceil(span / dt - 1e-12));
    const double step = steps > 0 ? span / steps : 0.0;
    for (int k = 0; k < steps; ++k) {
      const Eigen::Vector3d k1 = precession_rate(h_cl, n);
      const Eigen::Vector3d k2 = precession_rate(h_cl, n + 0.5 * step * k1);
      const Eigen::Vector3d k3 = precession_rate(h_cl, n + 0.5 * step * k2);
      const Eigen::Vector3d k4 = precession_rate(h_cl, n + step * k3);
      n += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      n.normalize();
    }
    t = target;
    if (t > 0.0) {
      const double drift = std::abs(h_cl.value(n) - e0);
      if (drift > 1e-8 * scale * t)
        throw StepTooLarge("classical_trajectory: energy drift " + std::to_string(drift) + " at t = " +
                           std::to_string(t));
    }
    out.push_back({t, n});
  }
  return out;
}

}  // namespace spinon::dyn
