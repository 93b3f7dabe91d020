#include "spinon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <vector>

#include "spinon/errors.hpp"

namespace spinon {

double hermiticity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  const double norm = a.norm();
  if (norm == 0.0) return 0.0;
  return (a - a.adjoint()).norm() / norm;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index q = 0; q < a.cols(); ++q)
    for (Eigen::Index p = 0; p < a.rows(); ++p)
      if (p != q) sum += std::norm(a(p, q));
  return std::sqrt(sum);
}

// One complex Jacobi rotation G = D R zeroing a(p,q), where D rephases
// column q so the (p,q) element becomes real and R is the real rotation.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  const Complex phase = apq / r;  // e^{i alpha}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (aqq - app) / (2.0 * r);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  // Columns: A <- A G, V <- V G.
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + gqp * akq;
    a(k, q) = s * akp + gqq * akq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + gqp * vkq;
    v(k, q) = s * vkp + gqq * vkq;
  }
  // Rows: A <- G^H A.
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj + std::conj(gqp) * aqj;
    a(q, j) = s * apj + std::conj(gqq) * aqj;
  }
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

}  // namespace

Eigensystem hermitian_eigensystem(const Matrix& input, const JacobiOptions& options) {
  if (input.rows() != input.cols())
    throw NonHermitianInput("hermitian_eigensystem: matrix is not square");
  const double defect = hermiticity_defect(input);
  if (defect > 1e-10)
    throw NonHermitianInput("hermitian_eigensystem: ||A - A^H|| / ||A|| = " +
                            std::to_string(defect));

  const Eigen::Index n = input.rows();
  Matrix a = 0.5 * (input + input.adjoint());
  Matrix v = Matrix::Identity(n, n);
  const double norm = a.norm();

  bool converged = norm == 0.0;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= options.threshold * norm) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 1e-18 * norm) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > options.threshold * norm)
    throw Error("hermitian_eigensystem: Jacobi sweeps did not converge");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  Eigensystem result;
  result.eigenvalues.resize(n);
  result.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    result.eigenvalues(k) = a(src, src).real();
    result.eigenvectors.col(k) = v.col(src);
  }
  return result;
}

RealVector hermitian_eigenvalues(const Matrix& a) { return hermitian_eigensystem(a).eigenvalues; }

Matrix propagator(const Eigensystem& h, double t) {
  Vector phases(h.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::exp(Complex(0.0, -h.eigenvalues(k) * t));
  return h.eigenvectors * phases.asDiagonal() * h.eigenvectors.adjoint();
}

Vector evolve(const Eigensystem& h, double t, const Vector& v) {
  Vector coeffs = h.eigenvectors.adjoint() * v;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::exp(Complex(0.0, -h.eigenvalues(k) * t));
  return h.eigenvectors * coeffs;
}

Vector evolve(const Matrix& h, double t, const Vector& v) {
  if (t == 0.0) {
    if (hermiticity_defect(h) > 1e-10)
      throw NonHermitianInput("evolve: Hamiltonian is not Hermitian");
    return v;
  }
  return evolve(hermitian_eigensystem(h), t, v);
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  char buf[128];
  out << "row,col,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%td,%td,%.17g,%.17g\n", static_cast<std::ptrdiff_t>(i),
                    static_cast<std::ptrdiff_t>(j), m(i, j).real(), m(i, j).imag());
      out << buf;
    }
}

}  // namespace spinon
