#pragma once

// Finite-difference solver for -psi'' + U(x) psi = eps psi on [-x_max, x_max]
// with Dirichlet ends. The three-point Laplacian gives a symmetric
// tridiagonal matrix; every solve runs at spacings h and h/2 and reports the
// Richardson combination (4 eps(h/2) - eps(h)) / 3.

#include <functional>
#include <vector>

namespace spinon {

struct SchrodingerGrid {
  double x_max = 0.0;
  int n_points = 0;  // including both Dirichlet ends; odd, >= 201

  double spacing() const { return 2.0 * x_max / (n_points - 1); }
  /// Throws InvalidArgument when n_points < 201, even, or x_max <= 0.
  void validate() const;
  /// Odd point count with spacing at most max_spacing.
  static SchrodingerGrid with_spacing(double x_max, double max_spacing);
};

struct SchrodingerSolution {
  std::vector<double> eigenvalues;  // Richardson-extrapolated
  std::vector<double> coarse;       // spacing h
  std::vector<double> fine;         // spacing h/2
  double coarse_spacing = 0.0;
  double fine_spacing = 0.0;
  double max_shift = 0.0;  // max |fine - coarse| relative to (1 + |eps|)
  /// Sample points and unit-norm eigenfunctions on the fine grid (when requested).
  std::vector<double> x;
  std::vector<std::vector<double>> eigenfunctions;
};

struct SchrodingerOptions {
  /// GridTooCoarse when |eps(h/2) - eps(h)| > shift_tolerance * (1 + |eps|).
  double shift_tolerance = 1e-3;
  /// GridTooCoarse when U(+-x_max) < max eps + margin.
  double wall_margin = 50.0;
  bool eigenfunctions = false;
};

SchrodingerSolution solve_schrodinger(const std::function<double(double)>& potential,
                                      const SchrodingerGrid& grid, int count,
                                      const SchrodingerOptions& options = {});

/// Sign changes of a sampled function, ignoring samples below
/// relative_floor * max|f| (tails).
int count_nodes(const std::vector<double>& f, double relative_floor = 1e-8);

}  // namespace spinon
