#include "spinon/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinon/errors.hpp"

namespace spinon {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_shape(const SymmetricTridiagonal& t) {
  if (t.diagonal.empty()) throw InvalidArgument("tridiagonal: empty matrix");
  if (t.off_diagonal.size() + 1 != t.diagonal.size())
    throw InvalidArgument("tridiagonal: off-diagonal length must be n - 1");
}

double pivot_floor(const SymmetricTridiagonal& t) {
  double emax = 0.0;
  for (double e : t.off_diagonal) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * std::max(1.0, emax);
}

double norm_bound(const SymmetricTridiagonal& t) {
  double bound = 0.0;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(t.diagonal[i]);
    if (i > 0) row += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) row += std::abs(t.off_diagonal[i]);
    bound = std::max(bound, row);
  }
  return bound;
}

std::size_t count_below(const SymmetricTridiagonal& t, double x, double pivmin) {
  std::size_t count = 0;
  double q = t.diagonal[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double e = t.off_diagonal[i - 1];
    q = t.diagonal[i] - x - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// LU factorization of T - shift with partial pivoting (LAPACK dgttrf layout).
struct TridiagonalLu {
  std::vector<double> dl, d, du, du2;
  std::vector<bool> swapped;

  TridiagonalLu(const SymmetricTridiagonal& t, double shift, double tiny) {
    const std::size_t n = t.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diagonal[i] - shift;
    dl = t.off_diagonal;
    du = t.off_diagonal;
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 1 ? n - 1 : 0, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = true;
      }
    }
    for (double& di : d)
      if (di == 0.0) di = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t k = n; k-- > 0;) {
      if (k + 2 >= n) continue;
      b[k] = (b[k] - du[k] * b[k + 1] - du2[k] * b[k + 2]) / d[k];
    }
  }
};

double normalize(std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  const double norm = std::sqrt(sum);
  if (norm > 0.0)
    for (double& x : v) x /= norm;
  return norm;
}

}  // namespace

std::size_t sturm_count(const SymmetricTridiagonal& t, double x) {
  check_shape(t);
  return count_below(t, x, pivot_floor(t));
}

std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t, std::size_t first,
                                            std::size_t count) {
  check_shape(t);
  const std::size_t n = t.size();
  if (first + count > n) throw InvalidArgument("tridiagonal_eigenvalues: index range exceeds size");
  const double pivmin = pivot_floor(t);
  const double bound = norm_bound(t);
  const double outer = bound + 2.0 * kEps * bound + pivmin;

  std::vector<double> values;
  values.reserve(count);
  double previous_lo = -outer;
  for (std::size_t k = first; k < first + count; ++k) {
    double lo = previous_lo;
    double hi = outer;
    for (int iter = 0; iter < 400; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + pivmin) break;
      if (count_below(t, mid, pivmin) > k)
        hi = mid;
      else
        lo = mid;
    }
    values.push_back(0.5 * (lo + hi));
    previous_lo = lo;
  }
  return values;
}

std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t) {
  return tridiagonal_eigenvalues(t, 0, t.size());
}

std::vector<std::vector<double>> tridiagonal_eigenvectors(const SymmetricTridiagonal& t,
                                                          std::span<const double> eigenvalues) {
  check_shape(t);
  const std::size_t n = t.size();
  const double bound = std::max(norm_bound(t), std::numeric_limits<double>::min());
  const double cluster_tol = 1e-3 * bound;
  const double tiny = kEps * bound;

  std::vector<std::vector<double>> vectors;
  vectors.reserve(eigenvalues.size());
  double last_shift = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
    double shift = eigenvalues[j];
    if (shift <= last_shift) shift = last_shift + 10.0 * tiny;
    last_shift = shift;
    const TridiagonalLu lu(t, shift, tiny);

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = 1.0 + 0.5 * std::sin(1.0 + 0.7 * static_cast<double>(i) + 0.3 * static_cast<double>(j));
    normalize(x);
    for (int iter = 0; iter < 5; ++iter) {
      lu.solve(x);
      for (std::size_t p = 0; p < j; ++p) {
        if (std::abs(eigenvalues[j] - eigenvalues[p]) > cluster_tol) continue;
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += x[i] * vectors[p][i];
        for (std::size_t i = 0; i < n; ++i) x[i] -= dot * vectors[p][i];
      }
      const double growth = normalize(x);
      if (iter >= 1 && growth > 1.0 / (1e3 * kEps * bound)) break;
    }
    vectors.push_back(std::move(x));
  }
  return vectors;
}

}  // namespace spinon
