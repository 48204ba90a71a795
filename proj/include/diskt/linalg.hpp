#pragma once

// Small dense kernels used by the spectral module: Cholesky factorization and
// triangular whitening over any ordered field with sqrt (double or GMP mpf), and
// a cyclic Jacobi eigensolver for symmetric double matrices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace diskt {

/// Row-major square or rectangular matrix.
template <class T>
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Dense() = default;
  Dense(std::size_t r, std::size_t c, const T& fill = T()) : rows(r), cols(c), a(r * c, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place lower Cholesky factor G = L L^T. The strict upper triangle is zeroed.
template <class T>
void cholesky(Dense<T>& g) {
  using std::sqrt;
  const std::size_t n = g.rows;
  if (g.cols != n) throw DomainError("cholesky: matrix is not square");
  if (n == 0) return;
  T s = g(0, 0);
  for (std::size_t j = 0; j < n; ++j) {
    s = g(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= g(j, k) * g(j, k);
    if (!(s > 0)) throw DomainError("cholesky: matrix is not positive definite");
    g(j, j) = sqrt(s);
    for (std::size_t i = j + 1; i < n; ++i) {
      s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= g(i, k) * g(j, k);
      g(i, j) = s / g(j, j);
    }
    for (std::size_t k = j + 1; k < n; ++k) g(j, k) = 0;
  }
}

/// L^{-1} K L^{-T} for lower-triangular L and symmetric K.
template <class T>
Dense<T> whiten(const Dense<T>& l, const Dense<T>& k) {
  const std::size_t n = l.rows;
  // Y = L^{-1} K, column by column.
  Dense<T> y = k;
  T s = k.a.empty() ? T() : k(0, 0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      s = y(i, c);
      for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * y(j, c);
      y(i, c) = s / l(i, i);
    }
  // M = L^{-1} Y^T; M is symmetric because K is.
  Dense<T> m = y;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      s = y(c, i);
      for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * m(j, c);
      m(i, c) = s / l(i, i);
    }
  return m;
}

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Dense<double> vectors;       // column j pairs with values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for a symmetric matrix.
inline SymmetricEigen jacobi_eigen(Dense<double> a, double tol = 1e-15, int max_sweeps = 100) {
  const std::size_t n = a.rows;
  if (a.cols != n) throw DomainError("jacobi_eigen: matrix is not square");
  Dense<double> v(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double scale = 0.0;
  for (double x : a.a) scale += x * x;
  scale = std::sqrt(scale);

  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (std::sqrt(2.0 * off) <= tol * scale || scale == 0.0) break;
    if (sweep >= max_sweeps) throw ConvergenceError("jacobi_eigen: sweep cap reached");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Dense<double>(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace diskt
