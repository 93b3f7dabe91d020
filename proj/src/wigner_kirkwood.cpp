#include "spinon/wigner_kirkwood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spinon/errors.hpp"

namespace spinon::wk {

namespace {

void check_temperature(double temperature) {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be positive");
}

}  // namespace

double quantum_free_energy(std::span<const double> energies, double temperature) {
  check_temperature(temperature);
  if (energies.empty()) throw InvalidArgument("quantum_free_energy: empty spectrum");
  const double e0 = *std::min_element(energies.begin(), energies.end());
  double z = 0.0;
  for (double e : energies) z += std::exp(-(e - e0) / temperature);
  return e0 - temperature * std::log(z);
}

double quantum_free_energy(const Matrix& h, double temperature) {
  const RealVector e = hermitian_eigenvalues(h);
  return quantum_free_energy(std::span<const double>(e.data(), static_cast<std::size_t>(e.size())), temperature);
}

ClassicalThermodynamics classical_thermodynamics(const ClassicalSpinHamiltonian& h, double temperature,
                                                 const SphereQuadrature& quad) {
  check_temperature(temperature);
  const double s = h.spin_length();
  if (!(s > 0.0)) throw InvalidArgument("classical thermodynamics needs S > 0");

  std::vector<double> energy(quad.nodes.size());
  for (std::size_t k = 0; k < quad.nodes.size(); ++k) energy[k] = h.value(quad.nodes[k]);
  const double f_min = *std::min_element(energy.begin(), energy.end());

  double z = 0.0;
  double moment = 0.0;
  for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
    const Eigen::Vector3d& n = quad.nodes[k];
    const double boltzmann = quad.weights[k] * std::exp(-(energy[k] - f_min) / temperature);
    const Eigen::Vector3d grad = h.gradient(n);
    const Eigen::Matrix3d projector = Eigen::Matrix3d::Identity() - n * n.transpose();
    const Eigen::Matrix3d kernel = h.hessian(n) - grad * grad.transpose() / temperature;
    z += boltzmann;
    moment += boltzmann * projector.cwiseProduct(kernel).sum();
  }

  ClassicalThermodynamics out;
  out.n_u = quad.n_u;
  out.free_energy = f_min - temperature * std::log((2.0 * s + 1.0) / (4.0 * std::numbers::pi) * z);
  out.correction = moment / z / (4.0 * s);
  return out;
}

double classical_free_energy(const ClassicalSpinHamiltonian& h, double temperature, const SphereQuadrature& quad) {
  return classical_thermodynamics(h, temperature, quad).free_energy;
}

double wk_correction(const ClassicalSpinHamiltonian& h, double temperature, const SphereQuadrature& quad) {
  return classical_thermodynamics(h, temperature, quad).correction;
}

ClassicalThermodynamics converged_classical_thermodynamics(const ClassicalSpinHamiltonian& h, double temperature,
                                                           double tolerance, int start_n_u, int max_n_u) {
  ClassicalThermodynamics previous = classical_thermodynamics(h, temperature, sphere_quadrature(start_n_u, 2 * start_n_u));
  for (int n_u = 2 * start_n_u; n_u <= max_n_u; n_u *= 2) {
    const ClassicalThermodynamics next = classical_thermodynamics(h, temperature, sphere_quadrature(n_u, 2 * n_u));
    if (std::abs(next.free_energy - previous.free_energy) <= tolerance &&
        std::abs(next.correction - previous.correction) <= tolerance)
      return next;
    previous = next;
  }
  throw QuadratureUnconverged("classical thermodynamics not converged to " + std::to_string(tolerance) +
                              " at n_u = " + std::to_string(max_n_u));
}

Preset parse_preset(const std::string& name) {
  if (name == "zeeman") return Preset::zeeman;
  if (name == "uniaxial") return Preset::uniaxial;
  throw InvalidArgument("unknown preset '" + name + "' (expected zeeman or uniaxial)");
}

const char* to_string(Preset preset) { return preset == Preset::zeeman ? "zeeman" : "uniaxial"; }

QuadraticSpinModel preset_model(Preset preset, SpinQuantum s, double field, double anisotropy) {
  const double spin = s.value();
  if (!(spin > 0.0)) throw InvalidArgument("preset_model: S must be positive");
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  if (preset == Preset::zeeman) {
    b(2) = -field / spin;
  } else {
    a(2, 2) = -anisotropy / (spin * spin);
    b(0) = -field / spin;
  }
  return {s, a, b};
}

FreeEnergyReport free_energy_report(const QuadraticSpinModel& model, double temperature, double tolerance) {
  FreeEnergyReport row;
  row.s_value = model.spin().value();
  row.temperature = temperature;
  row.f_quantum = quantum_free_energy(build_quadratic_hamiltonian(model), temperature);
  const ClassicalThermodynamics cl =
      converged_classical_thermodynamics(ClassicalSpinHamiltonian::from_quadratic(model), temperature, tolerance);
  row.f_classical = cl.free_energy;
  row.delta_f = cl.correction;
  row.residual = row.f_quantum - row.f_classical - row.delta_f;
  return row;
}

ConvergenceTable wk_convergence(Preset preset, std::span<const double> s_list, double temperature, double field,
                                double anisotropy) {
  if (s_list.empty()) throw InvalidArgument("wk_convergence: empty spin list");
  ConvergenceTable table;
  for (double s : s_list)
    table.rows.push_back(
        free_energy_report(preset_model(preset, SpinQuantum::from_value(s), field, anisotropy), temperature));
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    const auto& a = table.rows[i];
    const auto& b = table.rows[i + 1];
    const double gap_ratio = std::abs(a.f_quantum - a.f_classical) / std::abs(b.f_quantum - b.f_classical);
    const double residual_ratio = std::abs(a.residual) / std::abs(b.residual);
    const double log_s = std::log(b.s_value / a.s_value);
    table.gap_ratios.push_back(gap_ratio);
    table.residual_ratios.push_back(residual_ratio);
    table.gap_exponents.push_back(std::log(gap_ratio) / log_s);
    table.residual_exponents.push_back(std::log(residual_ratio) / log_s);
  }
  return table;
}

}  // namespace spinon::wk
