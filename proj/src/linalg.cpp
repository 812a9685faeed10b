#include "gwt/linalg.hpp"

#include <stdexcept>

namespace gwt {

Matrix identity(const Field& f, std::size_t n) {
  Matrix m(n, std::vector<Elem>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<Elem>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  const Field f = a[0][0].field();
  Matrix c(a.size(), std::vector<Elem>(b[0].size(), f.zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Elem det(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const Field f = a[0][0].field();
  Elem d = f.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      d = -d;
    }
    d *= a[k][k];
    const Elem inv = a[k][k].inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Elem r = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= r * a[k][j];
    }
  }
  return d;
}

Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const Field f = a[0][0].field();
  Matrix inv = identity(f, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[k]);
    std::swap(inv[piv], inv[k]);
    const Elem s = a[k][k].inv();
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] *= s;
      inv[k][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      const Elem r = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= r * a[k][j];
        inv[i][j] -= r * inv[k][j];
      }
    }
  }
  return inv;
}

}  // namespace gwt
