#pragma once

// Real symmetric tridiagonal eigenproblems: Sturm-sequence bisection for
// selected eigenvalues and inverse iteration for eigenvectors. Used for the
// finite-difference Schrödinger operator, the uniaxial spin chain in the S_z
// basis and the sector Hamiltonians, where dense Jacobi would be wasteful.

#include <cstddef>
#include <span>
#include <vector>

namespace spinon {

struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size() == diagonal.size() - 1

  std::size_t size() const { return diagonal.size(); }
};

/// Number of eigenvalues strictly below x.
std::size_t sturm_count(const SymmetricTridiagonal& t, double x);

/// Eigenvalues with ascending indices [first, first + count).
std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t, std::size_t first,
                                            std::size_t count);

std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t);

/// Unit-norm eigenvectors for the given (ascending, accurate) eigenvalues.
/// Vectors of close eigenvalues are orthogonalized against each other.
std::vector<std::vector<double>> tridiagonal_eigenvectors(const SymmetricTridiagonal& t,
                                                          std::span<const double> eigenvalues);

}  // namespace spinon
