#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "output.hpp"
#include "spinon/cli.hpp"
#include "spinon/dynamics.hpp"
#include "spinon/errors.hpp"
#include "spinon/qes_uniaxial.hpp"
#include "spinon/sector_models.hpp"
#include "spinon/wigner_kirkwood.hpp"

namespace spinon::cli {

namespace {

using nlohmann::ordered_json;

SpinQuantum spin_of(const RunConfig& c, double fallback) {
  return SpinQuantum::from_value(c.s.value_or(fallback));
}

void maybe_plot(const RunConfig& c, ArtifactWriter& out, const std::string& name, const std::string& title,
                const std::vector<PlotSeries>& series) {
  if (c.plot) out.write(name, svg_line_plot(title, series));
}

void run_spectrum(const RunConfig& c, ArtifactWriter& out) {
  const SpinQuantum s = spin_of(c, 1.0);
  const double b = c.b.value_or(1.0);
  std::vector<double> levels;
  if (c.alpha || c.beta) {
    const auto model = QuadraticSpinModel::biaxial(s, c.alpha.value_or(0.0), c.beta.value_or(0.0), b);
    const RealVector e = hermitian_eigenvalues(build_quadratic_hamiltonian(model));
    levels.assign(e.data(), e.data() + e.size());
  } else {
    levels = qes::uniaxial_spin_spectrum(qes::UniaxialModel(s, b));
  }
  CsvTable table({"level", "energy"});
  PlotSeries series{"energy", {}, {}};
  for (std::size_t n = 0; n < levels.size(); ++n) {
    table.row({static_cast<double>(n), levels[n]});
    series.x.push_back(static_cast<double>(n));
    series.y.push_back(levels[n]);
  }
  out.write("spectrum.csv", table.str());
  maybe_plot(c, out, "spectrum.svg", "spectrum", {series});
}

void run_potential(const RunConfig& c, ArtifactWriter& out) {
  const qes::UniaxialModel m(spin_of(c, 1.0), c.b.value_or(1.0));
  const auto u = qes::effective_potential(m);
  const double x_max = c.x_max.value_or(4.0);
  const int points = c.grid_points.value_or(801);
  CsvTable table({"x", "U"});
  PlotSeries series{"U(x)", {}, {}};
  for (int i = 0; i < points; ++i) {
    const double x = -x_max + 2.0 * x_max * i / (points - 1);
    table.row({x, u(x)});
    series.x.push_back(x);
    series.y.push_back(u(x));
  }
  out.write("potential.csv", table.str());

  const auto shape = qes::classify_potential(m);
  ordered_json doc;
  doc["shape"] = qes::to_string(shape.shape);
  doc["b0"] = m.b0();
  doc["minima"] = shape.minima;
  doc["c0"] = shape.c0;
  doc["c2"] = shape.c2;
  doc["c4"] = shape.c4;
  out.write("potential_shape.json", doc.dump(2) + "\n");
  maybe_plot(c, out, "potential.svg", "effective potential", {series});
}

void run_correspond(const RunConfig& c, ArtifactWriter& out, std::ostream& log) {
  const qes::UniaxialModel m(spin_of(c, 1.0), c.b.value_or(1.0));
  qes::CorrespondenceReport report;
  if (c.x_max || c.grid_points) {
    SchrodingerGrid grid = qes::uniaxial_grid(m, 0.0);
    if (c.x_max) grid.x_max = *c.x_max;
    if (c.grid_points) grid.n_points = *c.grid_points;
    else grid = SchrodingerGrid::with_spacing(grid.x_max, std::min(0.005 * grid.x_max, 2e-3));
    report = qes::verify_correspondence(m, grid);
  } else {
    report = qes::verify_correspondence(m);
  }

  CsvTable table({"level", "spin_E", "schrodinger_eps", "offset"});
  for (std::size_t n = 0; n < report.spin_levels.size(); ++n)
    table.row({static_cast<double>(n), report.spin_levels[n], report.schrodinger_levels[n],
               report.per_level_offsets[n]});
  out.write("correspondence.csv", table.str());

  const double tolerance = 1e-6 * (1.0 + std::abs(report.schrodinger_levels.front()));
  ordered_json doc;
  doc["levels"] = report.spin_levels.size();
  doc["fitted_slope"] = report.fitted_slope;
  doc["fitted_offset"] = report.fitted_offset;
  doc["offset_spread"] = report.offset_spread;
  doc["offset_tolerance"] = tolerance;
  doc["next_level"] = report.next_level;
  doc["negative_control_gap"] = report.negative_control_gap;
  doc["x_max"] = report.grid.x_max;
  doc["coarse_spacing"] = report.coarse_spacing;
  doc["fine_spacing"] = report.fine_spacing;
  doc["max_shift"] = report.max_shift;
  out.write("correspondence_summary.json", doc.dump(2) + "\n");

  const auto wave = qes::reconstruct_wavefunction(m, 0, report.grid);
  CsvTable psi({"x", "psi"});
  for (std::size_t i = 0; i < wave.x.size(); ++i) psi.row({wave.x[i], wave.psi[i]});
  out.write("wavefunction.csv", psi.str());
  log << "correspond: " << report.spin_levels.size() << " levels, offset spread "
      << format_double(report.offset_spread) << ", weight " << qes::to_string(wave.weight) << "\n";
  maybe_plot(c, out, "wavefunction.svg", "ground state", {{"psi", wave.x, wave.psi}});
}

void run_susceptibility(const RunConfig& c, ArtifactWriter& out) {
  const SpinQuantum s = spin_of(c, 10.0);
  const double b0 = s.two_s() + 1.0;
  const double lo = c.b_min.value_or(0.1 * b0);
  const double hi = c.b_max.value_or(1.5 * b0);
  const auto report = qes::susceptibility_scan(s, lo, hi, c.db.value_or(1e-3 * b0));
  CsvTable table({"B", "chi"});
  for (std::size_t i = 0; i < report.b_grid.size(); ++i) table.row({report.b_grid[i], report.chi_values[i]});
  out.write("susceptibility.csv", table.str());
  ordered_json doc;
  doc["s"] = s.value();
  doc["b0"] = b0;
  doc["b_star"] = report.b_star;
  doc["gamma_estimate"] = report.gamma_estimate;
  doc["boundary_maximum"] = report.boundary_maximum;
  out.write("susceptibility_summary.json", doc.dump(2) + "\n");
  maybe_plot(c, out, "susceptibility.svg", "susceptibility", {{"chi", report.b_grid, report.chi_values}});
}

void write_sectors(const std::vector<sector::SectorSpectrum>& sectors, ArtifactWriter& out,
                   const std::string& name) {
  CsvTable table({"sector", "index", "energy"});
  for (const auto& sector : sectors)
    for (std::size_t i = 0; i < sector.eigenvalues.size(); ++i)
      table.row({sector.label, static_cast<double>(i), sector.eigenvalues[i]});
  out.write(name, table.str());
}

void run_dicke(const RunConfig& c, ArtifactWriter& out) {
  sector::DickeModel m;
  m.s = spin_of(c, 1.0);
  m.omega = c.omega.value_or(1.0);
  m.epsilon = c.epsilon.value_or(1.0);
  m.g = c.g.value_or(0.5);
  std::vector<sector::SectorSpectrum> sectors;
  for (int i = 0; i <= c.sector_max.value_or(5); ++i) sectors.push_back(sector::dicke_sector(m, -m.s.value() + i));
  write_sectors(sectors, out, "dicke_sectors.csv");
}

void run_oscillators(const RunConfig& c, ArtifactWriter& out) {
  sector::TwoOscillatorModel m;
  m.omega = c.omega.value_or(1.0);
  m.capital_omega = c.big_omega.value_or(0.5);
  m.g = c.g.value_or(0.1);
  std::vector<sector::SectorSpectrum> sectors;
  for (int n = 0; n <= c.sector_max.value_or(6); ++n) sectors.push_back(sector::two_oscillator_sector(m, n));
  write_sectors(sectors, out, "oscillator_sectors.csv");
}

std::vector<double> time_grid(double t_max, int steps) {
  std::vector<double> times(steps + 1);
  for (int k = 0; k <= steps; ++k) times[k] = t_max * k / steps;
  return times;
}

void run_dynamics(const RunConfig& c, ArtifactWriter& out) {
  const dyn::TwistingModel m{spin_of(c, 2.0), c.b.value_or(1.0), c.d.value_or(0.1)};
  const CoherentPoint point(c.theta.value_or(1.0), c.phi.value_or(0.0));
  const double t_max = c.t_max.value_or(10.0 / std::max(std::abs(m.b), 1e-12));
  const auto times = time_grid(t_max, c.steps.value_or(200));

  const auto ops = build_spin_operators(m.s);
  const auto exact = dyn::observable_evolution(build_quadratic_hamiltonian(m.hamiltonian(), ops), ops.splus,
                                               point, times);
  const auto closed = dyn::twisting_expectation(m, point, times);

  CsvTable exact_table({"t", "re_g", "im_g"});
  CsvTable closed_table({"t", "re_g", "im_g"});
  double deviation = 0.0;
  PlotSeries re_exact{"Re exact", times, {}}, re_closed{"Re closed form", times, {}};
  for (std::size_t k = 0; k < times.size(); ++k) {
    exact_table.row({times[k], exact.values[k].real(), exact.values[k].imag()});
    closed_table.row({times[k], closed[k].real(), closed[k].imag()});
    deviation = std::max(deviation, std::abs(exact.values[k] - closed[k]));
    re_exact.y.push_back(exact.values[k].real());
    re_closed.y.push_back(closed[k].real());
  }
  out.write("dynamics_exact.csv", exact_table.str());
  out.write("dynamics_closed_form.csv", closed_table.str());
  ordered_json doc;
  doc["observable"] = "S_plus";
  doc["max_deviation"] = deviation;
  doc["weak_twisting"] = m.weak_twisting();
  out.write("dynamics_summary.json", doc.dump(2) + "\n");
  maybe_plot(c, out, "dynamics.svg", "<S+>(t)", {re_exact, re_closed});
}

Matrix random_hermitian(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(u(rng), u(rng));
  return (a + a.adjoint()) / 2.0;
}

void run_closed_eq(const RunConfig& c, ArtifactWriter& out) {
  const SpinQuantum s = spin_of(c, 2.0);
  const auto model = QuadraticSpinModel::uniaxial(s, c.b.value_or(1.0));
  const Matrix g = random_hermitian(s.dim(), c.seed);
  const double h = c.h.value_or(0.02);
  const double t = c.t_max.value_or(0.5);
  const auto grid = dyn::residual_sphere_grid(c.nu.value_or(8), c.nphi.value_or(16));
  const auto coarse = dyn::closed_equation_residual(model, g, grid, t, h, h);
  const auto fine = dyn::closed_equation_residual(model, g, grid, t, h / 2, h / 2);

  double extrapolated = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    extrapolated = std::max(extrapolated, std::abs((4.0 * fine.residuals[i] - coarse.residuals[i]) / 3.0));
  ordered_json doc;
  doc["max"] = coarse.max;
  doc["mean"] = coarse.mean;
  doc["h"] = coarse.h;
  doc["dt"] = coarse.dt;
  doc["refined"] = {{"max", fine.max}, {"mean", fine.mean}, {"h", fine.h}, {"dt", fine.dt}};
  doc["ratio"] = coarse.max / fine.max;
  doc["extrapolated_max"] = extrapolated;
  out.write("closed_eq.json", doc.dump(2) + "\n");
}

void run_wk(const RunConfig& c, ArtifactWriter& out) {
  const auto preset = wk::parse_preset(c.preset);
  std::vector<double> s_list = c.s_list;
  if (s_list.empty()) s_list = {5, 10, 20};
  const double temperature = c.temperature.value_or(1.0);
  const double field = c.b.value_or(preset == wk::Preset::zeeman ? 1.0 : 2.0);
  const auto table = wk::wk_convergence(preset, s_list, temperature, field, c.alpha.value_or(1.0));
  CsvTable csv({"S", "T", "F_quantum", "F_classical", "deltaF", "residual"});
  PlotSeries residual{"|residual|", {}, {}};
  for (const auto& r : table.rows) {
    csv.row({r.s_value, r.temperature, r.f_quantum, r.f_classical, r.delta_f, r.residual});
    residual.x.push_back(r.s_value);
    residual.y.push_back(std::abs(r.residual));
  }
  out.write("wk.csv", csv.str());
  maybe_plot(c, out, "wk.svg", "Wigner-Kirkwood residual", {residual});
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
  try {
    validate(config);
    ArtifactWriter out(config.out);
    switch (config.command) {
      case Command::spectrum: run_spectrum(config, out); break;
      case Command::potential: run_potential(config, out); break;
      case Command::correspond: run_correspond(config, out, log); break;
      case Command::susceptibility: run_susceptibility(config, out); break;
      case Command::dicke: run_dicke(config, out); break;
      case Command::oscillators: run_oscillators(config, out); break;
      case Command::dynamics: run_dynamics(config, out); break;
      case Command::closed_eq: run_closed_eq(config, out); break;
      case Command::wk: run_wk(config, out); break;
    }
    out.write_manifest(to_string(config.command), config_to_json(config));
    return kOk;
  } catch (const ConventionMismatch& e) {
    log << "convention mismatch: " << e.what() << "\n";
    return kConvention;
  } catch (const GridTooCoarse& e) {
    log << "convergence error: " << e.what() << "\n";
    return kConvergence;
  } catch (const QuadratureUnconverged& e) {
    log << "convergence error: " << e.what() << "\n";
    return kConvergence;
  } catch (const StepTooLarge& e) {
    log << "convergence error: " << e.what() << "\n";
    return kConvergence;
  } catch (const InvalidArgument& e) {
    log << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const EmptySector& e) {
    log << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const PoleSingularity& e) {
    log << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"spinon: spin Hamiltonians, their Schrodinger partners and coherent-state dynamics"};
  app.require_subcommand(1);

  RunConfig flags;
  std::string config_path;
  std::vector<std::string> explicit_keys;

  const auto add_real = [&](CLI::App* sub, const std::string& name, std::optional<double>& field,
                            const std::string& help) { sub->add_option("--" + name, field, help); };

  std::vector<CLI::App*> subcommands;
  for (Command command : {Command::spectrum, Command::potential, Command::correspond, Command::susceptibility,
                          Command::dicke, Command::oscillators, Command::dynamics, Command::closed_eq,
                          Command::wk}) {
    CLI::App* sub = app.add_subcommand(to_string(command));
    subcommands.push_back(sub);
    sub->set_help_flag("--help", "print this help message and exit");
    add_real(sub, "s", flags.s, "spin length S (half-integer)");
    add_real(sub, "b", flags.b, "field B");
    add_real(sub, "alpha", flags.alpha, "anisotropy alpha");
    add_real(sub, "beta", flags.beta, "anisotropy beta");
    add_real(sub, "omega", flags.omega, "oscillator frequency");
    add_real(sub, "big-omega", flags.big_omega, "second oscillator frequency");
    add_real(sub, "epsilon", flags.epsilon, "spin splitting");
    add_real(sub, "g", flags.g, "coupling");
    add_real(sub, "d", flags.d, "twisting strength");
    add_real(sub, "temperature", flags.temperature, "temperature T");
    add_real(sub, "theta", flags.theta, "initial polar angle");
    add_real(sub, "phi", flags.phi, "initial azimuth");
    add_real(sub, "t-max", flags.t_max, "final time");
    add_real(sub, "h", flags.h, "sphere difference step");
    add_real(sub, "b-min", flags.b_min, "scan start");
    add_real(sub, "b-max", flags.b_max, "scan end");
    add_real(sub, "db", flags.db, "finite-difference step in B");
    add_real(sub, "x-max", flags.x_max, "half-width of the x grid");
    sub->add_option("--grid-points", flags.grid_points, "x grid points (odd)");
    sub->add_option("--nu", flags.nu, "latitude nodes");
    sub->add_option("--nphi", flags.nphi, "longitude nodes");
    sub->add_option("--sector-max", flags.sector_max, "number of sectors minus one");
    sub->add_option("--steps", flags.steps, "time steps");
    sub->add_option("--s-list", flags.s_list, "spin lengths")->delimiter(',');
    sub->add_option("--preset", flags.preset, "wk preset: zeeman or uniaxial");
    sub->add_option("--out", flags.out, "output directory");
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_flag("--plot", flags.plot, "also write SVG plots");
    sub->add_option("--config", config_path, "JSON config file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  CLI::App* chosen = nullptr;
  for (CLI::App* sub : subcommands)
    if (sub->parsed()) chosen = sub;
  flags.command = parse_command(chosen->get_name());
  explicit_keys.push_back("command");
  for (const char* key : {"s-list", "preset", "out", "seed", "plot"})
    if (chosen->count(std::string("--") + key) > 0) explicit_keys.emplace_back(key);

  RunConfig config;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw InvalidArgument("config: cannot read '" + config_path + "'");
      std::stringstream text;
      text << in.rdbuf();
      config = config_from_json(text.str());
    }
  } catch (const Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  }
  config = merge(config, flags, explicit_keys);
  if (const char* env = std::getenv("SPINON_OUT"); env && *env) config.out = env;
  return run(config, std::cerr);
}

}  // namespace spinon::cli
