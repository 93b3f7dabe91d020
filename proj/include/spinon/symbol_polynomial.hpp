#pragma once

// Exact polynomial calculus for unnormalized coherent-state symbols
// <xi|A|xi> = sum_{p,q} c[p][q] conj(xi)^p xi^q, 0 <= p, q <= 2S.
//
// Spin operators act on symbols from the left as first-order differential
// operators in conj(xi):
//   <xi|S_+ A|xi> = d/dxi* P
//   <xi|S_z A|xi> = (S - xi* d/dxi*) P
//   <xi|S_- A|xi> = (2S xi* - xi*^2 d/dxi*) P
// The constant terms S and 2S xi* are required for the identity to hold.

#include "spinon/linalg.hpp"
#include "spinon/spin_algebra.hpp"

namespace spinon {

class SymbolPolynomial {
 public:
  SymbolPolynomial(SpinQuantum s, Matrix coeffs);
  static SymbolPolynomial zero(SpinQuantum s);

  SpinQuantum spin() const { return s_; }
  /// coeffs()(p, q) multiplies conj(xi)^p xi^q.
  const Matrix& coeffs() const { return coeffs_; }

  Complex evaluate(Complex xi) const;

  /// Largest |c[p][q] - other.c[p][q]|.
  double max_coeff_difference(const SymbolPolynomial& other) const;

  SymbolPolynomial operator+(const SymbolPolynomial& other) const;
  SymbolPolynomial operator-(const SymbolPolynomial& other) const;
  friend SymbolPolynomial operator*(Complex scale, const SymbolPolynomial& p);

 private:
  SpinQuantum s_;
  Matrix coeffs_;
};

/// Coefficients c[p][q] = sqrt(C_p C_q) A_pq read off the matrix elements.
SymbolPolynomial polynomial_symbol(const Matrix& a);

/// Polynomial of <xi|S_i A|xi> given the polynomial of <xi|A|xi>.
SymbolPolynomial apply_xi_representation(SpinComponent component, const SymbolPolynomial& p);

}  // namespace spinon
