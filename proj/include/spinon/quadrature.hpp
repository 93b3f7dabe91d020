#pragma once

#include <vector>

#include <Eigen/Dense>

namespace spinon {

struct GaussLegendreRule {
  std::vector<double> nodes;  // ascending in (-1, 1)
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
GaussLegendreRule gauss_legendre(int n);

/// Gauss-Legendre in u = cos(theta) times the trapezoid rule in phi.
/// Weights sum to 4 pi; exact for spherical polynomials of degree <= 2 n_u - 1
/// (and < n_phi in the azimuthal frequency).
struct SphereQuadrature {
  int n_u = 0;
  int n_phi = 0;
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<Eigen::Vector3d> nodes;
  std::vector<double> weights;

  template <typename F>
  auto integrate(F&& f) const {
    using R = decltype(f(nodes.front()));
    R sum{};
    for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * f(nodes[k]);
    return sum;
  }
};

SphereQuadrature sphere_quadrature(int n_u, int n_phi);

}  // namespace spinon
