#include "spinon/symbol_polynomial.hpp"

#include "spinon/errors.hpp"

namespace spinon {

SymbolPolynomial::SymbolPolynomial(SpinQuantum s, Matrix coeffs) : s_(s), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != s.dim() || coeffs_.cols() != s.dim())
    throw InvalidArgument("SymbolPolynomial: coefficient matrix must be (2S+1)x(2S+1)");
}

SymbolPolynomial SymbolPolynomial::zero(SpinQuantum s) {
  return {s, Matrix::Zero(s.dim(), s.dim())};
}

Complex SymbolPolynomial::evaluate(Complex xi) const {
  const int n = s_.dim();
  Vector powers(n);
  Complex power = 1.0;
  for (int k = 0; k < n; ++k) {
    powers(k) = power;
    power *= xi;
  }
  // sum_pq c_pq conj(xi^p) xi^q = powers^H C powers
  return powers.dot(coeffs_ * powers);
}

double SymbolPolynomial::max_coeff_difference(const SymbolPolynomial& other) const {
  return (coeffs_ - other.coeffs_).cwiseAbs().maxCoeff();
}

SymbolPolynomial SymbolPolynomial::operator+(const SymbolPolynomial& other) const {
  return {s_, coeffs_ + other.coeffs_};
}

SymbolPolynomial SymbolPolynomial::operator-(const SymbolPolynomial& other) const {
  return {s_, coeffs_ - other.coeffs_};
}

SymbolPolynomial operator*(Complex scale, const SymbolPolynomial& p) {
  return {p.s_, scale * p.coeffs_};
}

SymbolPolynomial polynomial_symbol(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw InvalidArgument("polynomial_symbol: operator must be square");
  const SpinQuantum s(static_cast<int>(a.rows()) - 1);
  Matrix c(a.rows(), a.cols());
  for (int p = 0; p < s.dim(); ++p)
    for (int q = 0; q < s.dim(); ++q) c(p, q) = coherent_weight(s, p) * coherent_weight(s, q) * a(p, q);
  return {s, std::move(c)};
}

namespace {

SymbolPolynomial raise(const SymbolPolynomial& poly) {
  const int n = poly.spin().dim();
  Matrix out = Matrix::Zero(n, n);
  for (int p = 1; p < n; ++p) out.row(p - 1) = static_cast<double>(p) * poly.coeffs().row(p);
  return {poly.spin(), std::move(out)};
}

SymbolPolynomial lower(const SymbolPolynomial& poly) {
  const int n = poly.spin().dim();
  const int two_s = poly.spin().two_s();
  Matrix out = Matrix::Zero(n, n);
  // (2S - p) vanishes at p = 2S, so the degree never exceeds 2S.
  for (int p = 0; p + 1 < n; ++p) out.row(p + 1) = static_cast<double>(two_s - p) * poly.coeffs().row(p);
  return {poly.spin(), std::move(out)};
}

SymbolPolynomial project_z(const SymbolPolynomial& poly) {
  const int n = poly.spin().dim();
  Matrix out(n, n);
  for (int p = 0; p < n; ++p) out.row(p) = (poly.spin().value() - p) * poly.coeffs().row(p);
  return {poly.spin(), std::move(out)};
}

}  // namespace

SymbolPolynomial apply_xi_representation(SpinComponent component, const SymbolPolynomial& p) {
  switch (component) {
    case SpinComponent::plus: return raise(p);
    case SpinComponent::minus: return lower(p);
    case SpinComponent::z: return project_z(p);
    case SpinComponent::x: return Complex(0.5) * (raise(p) + lower(p));
    case SpinComponent::y: break;
  }
  return Complex(0.0, -0.5) * (raise(p) - lower(p));
}

}  // namespace spinon
