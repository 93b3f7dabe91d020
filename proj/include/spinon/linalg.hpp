#pragma once

// Dense complex linear algebra used by every module: the Hermitian Jacobi
// eigensolver, unitary time evolution and a CSV matrix dump.

#include <complex>
#include <iosfwd>

#include <Eigen/Dense>

namespace spinon {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
struct Eigensystem {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

struct JacobiOptions {
  double threshold = 1e-14;  // relative off-diagonal Frobenius norm
  int max_sweeps = 50;
};

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
/// Throws NonHermitianInput when ||A - A^H|| > 1e-10 ||A||.
Eigensystem hermitian_eigensystem(const Matrix& a, const JacobiOptions& options = {});

RealVector hermitian_eigenvalues(const Matrix& a);

/// ||A - A^H||_F / max(||A||_F, tiny).
double hermiticity_defect(const Matrix& a);

/// exp(-i H t) from a precomputed eigensystem of H (hbar = 1).
Matrix propagator(const Eigensystem& h, double t);

/// exp(-i H t) v.
Vector evolve(const Matrix& h, double t, const Vector& v);
Vector evolve(const Eigensystem& h, double t, const Vector& v);

/// Writes "row,col,re,im" rows, one per matrix element.
void write_matrix_csv(std::ostream& out, const Matrix& m);

}  // namespace spinon
