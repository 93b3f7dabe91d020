#include "spinon/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinon/errors.hpp"
#include "spinon/tridiagonal.hpp"

namespace spinon {

void SchrodingerGrid::validate() const {
  if (!(x_max > 0.0)) throw InvalidArgument("SchrodingerGrid: x_max must be positive");
  if (n_points < 201 || n_points % 2 == 0)
    throw InvalidArgument("SchrodingerGrid: n_points must be odd and >= 201, got " +
                          std::to_string(n_points));
}

SchrodingerGrid SchrodingerGrid::with_spacing(double x_max, double max_spacing) {
  int n = static_cast<int>(std::ceil(2.0 * x_max / max_spacing)) + 1;
  n = std::max(n, 201);
  if (n % 2 == 0) ++n;
  return {x_max, n};
}

namespace {

SymmetricTridiagonal discretize(const std::function<double(double)>& potential, double x_max,
                                int n_points, std::vector<double>& interior_x) {
  const double h = 2.0 * x_max / (n_points - 1);
  const double inv_h2 = 1.0 / (h * h);
  const auto n = static_cast<std::size_t>(n_points - 2);
  SymmetricTridiagonal t;
  t.diagonal.resize(n);
  t.off_diagonal.assign(n - 1, -inv_h2);
  interior_x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -x_max + static_cast<double>(i + 1) * h;
    interior_x[i] = x;
    t.diagonal[i] = 2.0 * inv_h2 + potential(x);
  }
  return t;
}

}  // namespace

SchrodingerSolution solve_schrodinger(const std::function<double(double)>& potential,
                                      const SchrodingerGrid& grid, int count,
                                      const SchrodingerOptions& options) {
  grid.validate();
  if (count < 1 || count > 40) throw InvalidArgument("solve_schrodinger: count must be in [1, 40]");

  std::vector<double> x_coarse;
  std::vector<double> x_fine;
  const SymmetricTridiagonal coarse = discretize(potential, grid.x_max, grid.n_points, x_coarse);
  const SymmetricTridiagonal fine = discretize(potential, grid.x_max, 2 * grid.n_points - 1, x_fine);

  SchrodingerSolution sol;
  const auto k = static_cast<std::size_t>(count);
  sol.coarse = tridiagonal_eigenvalues(coarse, 0, k);
  sol.fine = tridiagonal_eigenvalues(fine, 0, k);
  sol.coarse_spacing = grid.spacing();
  sol.fine_spacing = 0.5 * grid.spacing();
  sol.eigenvalues.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    sol.eigenvalues[i] = (4.0 * sol.fine[i] - sol.coarse[i]) / 3.0;
    sol.max_shift = std::max(sol.max_shift, std::abs(sol.fine[i] - sol.coarse[i]) /
                                                (1.0 + std::abs(sol.eigenvalues[i])));
  }
  if (sol.max_shift > options.shift_tolerance)
    throw GridTooCoarse("solve_schrodinger: (h, h/2) eigenvalue shift " + std::to_string(sol.max_shift) +
                        " exceeds tolerance " + std::to_string(options.shift_tolerance));
  const double wall = std::min(potential(-grid.x_max), potential(grid.x_max));
  if (wall < sol.eigenvalues.back() + options.wall_margin)
    throw GridTooCoarse("solve_schrodinger: U(x_max) = " + std::to_string(wall) +
                        " is within the wall margin of the highest level " +
                        std::to_string(sol.eigenvalues.back()));

  if (options.eigenfunctions) {
    sol.x = x_fine;
    sol.eigenfunctions = tridiagonal_eigenvectors(fine, sol.fine);
  }
  return sol;
}

int count_nodes(const std::vector<double>& f, double relative_floor) {
  double peak = 0.0;
  for (double v : f) peak = std::max(peak, std::abs(v));
  const double floor = relative_floor * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : f) {
    if (std::abs(v) <= floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

}  // namespace spinon
