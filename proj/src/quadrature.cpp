#include "spinon/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "spinon/errors.hpp"

namespace spinon {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

SphereQuadrature sphere_quadrature(int n_u, int n_phi) {
  if (n_u < 2 || n_phi < 4) throw InvalidArgument("sphere_quadrature: need n_u >= 2 and n_phi >= 4");
  const GaussLegendreRule gl = gauss_legendre(n_u);
  SphereQuadrature q;
  q.n_u = n_u;
  q.n_phi = n_phi;
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  for (int i = 0; i < n_u; ++i) {
    const double u = gl.nodes[static_cast<std::size_t>(i)];
    const double st = std::sqrt(1.0 - u * u);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * dphi;
      q.theta.push_back(std::acos(u));
      q.phi.push_back(phi);
      q.nodes.emplace_back(st * std::cos(phi), st * std::sin(phi), u);
      q.weights.push_back(gl.weights[static_cast<std::size_t>(i)] * dphi);
    }
  }
  return q;
}

}  // namespace spinon
