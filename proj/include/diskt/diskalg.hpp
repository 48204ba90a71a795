#pragma once

// Polynomials in (z, zbar) on the unit disk and their angular decomposition.
//
// The inner product is the one of L^2(D, dA) with dA normalized to unit mass:
//   <z^m zbar^n, z^p zbar^q> = [m - n == p - q] / (m + q + 1).

#include <algorithm>
#include <cmath>
#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace diskt {

/// Exponent pair of z^m zbar^n.
struct Monomial {
  int m = 0;
  int n = 0;

  int degree() const { return m + n; }
  /// Rotation degree d = m - n.
  int rotation() const { return m - n; }

  auto operator<=>(const Monomial&) const = default;
};

template <RealField R>
class DiskPolynomial {
 public:
  using Scalar = Complex<R>;
  using Terms = std::map<Monomial, Scalar>;

  DiskPolynomial() = default;
  DiskPolynomial(const Scalar& c) { add({0, 0}, c); }  // NOLINT(google-explicit-constructor)

  static DiskPolynomial monomial(int m, int n, const Scalar& a = Scalar(1)) {
    DiskPolynomial p;
    p.add({m, n}, a);
    return p;
  }

  /// Adds a * z^m zbar^n. Entries that cancel to zero are erased.
  DiskPolynomial& add(Monomial k, const Scalar& a) {
    if (k.m < 0 || k.n < 0) throw DomainError("DiskPolynomial: negative exponent");
    if (a.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(k, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Scalar coeff(Monomial k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest m + n among stored terms; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [k, a] : terms_) d = std::max(d, k.degree());
    return d;
  }

  DiskPolynomial& operator+=(const DiskPolynomial& o) {
    for (const auto& [k, a] : o.terms_) add(k, a);
    return *this;
  }
  DiskPolynomial& operator-=(const DiskPolynomial& o) {
    for (const auto& [k, a] : o.terms_) add(k, -a);
    return *this;
  }
  friend DiskPolynomial operator+(DiskPolynomial a, const DiskPolynomial& b) { return a += b; }
  friend DiskPolynomial operator-(DiskPolynomial a, const DiskPolynomial& b) { return a -= b; }
  friend DiskPolynomial operator-(const DiskPolynomial& a) { return a * Scalar(-1); }

  friend DiskPolynomial operator*(const DiskPolynomial& p, const Scalar& s) {
    DiskPolynomial out;
    for (const auto& [k, a] : p.terms_) out.add(k, a * s);
    return out;
  }
  friend DiskPolynomial operator*(const Scalar& s, const DiskPolynomial& p) { return p * s; }

  friend DiskPolynomial operator*(const DiskPolynomial& p, const DiskPolynomial& q) {
    DiskPolynomial out;
    for (const auto& [k1, a1] : p.terms_)
      for (const auto& [k2, a2] : q.terms_) out.add({k1.m + k2.m, k1.n + k2.n}, a1 * a2);
    return out;
  }

  friend bool operator==(const DiskPolynomial& a, const DiskPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using ExactPolynomial = DiskPolynomial<Rational>;
using FloatPolynomial = DiskPolynomial<double>;

inline FloatPolynomial to_float(const ExactPolynomial& p) {
  FloatPolynomial out;
  for (const auto& [k, a] : p.terms()) out.add(k, Complex<double>(to_double(a.re), to_double(a.im)));
  return out;
}

/// Exact image of a floating polynomial (every double is a dyadic rational).
inline ExactPolynomial to_exact(const FloatPolynomial& p) {
  ExactPolynomial out;
  for (const auto& [k, a] : p.terms()) out.add(k, ExactComplex(Rational(a.re), Rational(a.im)));
  return out;
}

/// g_d(rho e^{i theta}) = f_d(rho) e^{i d theta} with f_d(rho) = sum_n b_n rho^{2n+d}.
/// b[n] is the coefficient of z^{n+d} zbar^n, so n >= max(0, -d).
template <RealField R>
struct AngularComponent {
  int d = 0;
  std::map<int, Complex<R>> b;

  int min_index() const { return std::max(0, -d); }

  DiskPolynomial<R> to_polynomial() const {
    DiskPolynomial<R> p;
    for (const auto& [n, c] : b) {
      if (n < min_index()) throw DomainError("AngularComponent: index below max(0, -d)");
      p.add({n + d, n}, c);
    }
    return p;
  }

  /// f_d(rho).
  std::complex<double> radial(double rho) const {
    std::complex<double> s = 0.0;
    for (const auto& [n, c] : b) s += c.to_std() * std::pow(rho, 2 * n + d);
    return s;
  }
};

template <RealField R>
std::vector<AngularComponent<R>> decompose(const DiskPolynomial<R>& p) {
  std::map<int, AngularComponent<R>> by_d;
  for (const auto& [k, a] : p.terms()) {
    auto& g = by_d[k.rotation()];
    g.d = k.rotation();
    g.b[k.n] = a;
  }
  std::vector<AngularComponent<R>> out;
  out.reserve(by_d.size());
  for (auto& [d, g] : by_d) out.push_back(std::move(g));
  return out;
}

template <RealField R>
DiskPolynomial<R> reassemble(const std::vector<AngularComponent<R>>& parts) {
  DiskPolynomial<R> p;
  for (const auto& g : parts) p += g.to_polynomial();
  return p;
}

/// The single component of rotation degree d (possibly empty).
template <RealField R>
AngularComponent<R> component(const DiskPolynomial<R>& p, int d) {
  AngularComponent<R> g;
  g.d = d;
  for (const auto& [k, a] : p.terms())
    if (k.rotation() == d) g.b[k.n] = a;
  return g;
}

template <RealField R>
DiskPolynomial<R> conj(const DiskPolynomial<R>& p) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : p.terms()) out.add({k.n, k.m}, conj(a));
  return out;
}

/// <phi, psi> = integral of phi * conj(psi) dA.
template <RealField R>
Complex<R> inner_product(const DiskPolynomial<R>& phi, const DiskPolynomial<R>& psi) {
  std::multimap<int, std::pair<Monomial, Complex<R>>> by_d;
  for (const auto& [k, a] : psi.terms()) by_d.emplace(k.rotation(), std::make_pair(k, a));
  Complex<R> s;
  for (const auto& [k, a] : phi.terms()) {
    auto [lo, hi] = by_d.equal_range(k.rotation());
    for (auto it = lo; it != hi; ++it) {
      const auto& [k2, b] = it->second;
      s += a * conj(b) * ratio<R>(1, k.m + k2.n + 1);
    }
  }
  return s;
}

template <RealField R>
R norm_sq(const DiskPolynomial<R>& p) {
  return inner_product(p, p).re;
}

/// ||g_d||^2 = sum_{n,l} b_n conj(b_l) / (n + l + d + 1).
template <RealField R>
R norm_sq(const AngularComponent<R>& g) {
  Complex<R> s;
  for (const auto& [n, bn] : g.b)
    for (const auto& [l, bl] : g.b) s += bn * conj(bl) * ratio<R>(1, n + l + g.d + 1);
  return s.re;
}

template <RealField R>
std::complex<double> evaluate(const DiskPolynomial<R>& p, std::complex<double> z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("evaluate: point outside the closed unit disk");
  const std::complex<double> zb = std::conj(z);
  std::complex<double> s = 0.0;
  for (const auto& [k, a] : p.terms()) s += a.to_std() * std::pow(z, k.m) * std::pow(zb, k.n);
  return s;
}

template <RealField R>
DiskPolynomial<R> d_dz(const DiskPolynomial<R>& p) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : p.terms())
    if (k.m > 0) out.add({k.m - 1, k.n}, a * R(k.m));
  return out;
}

template <RealField R>
DiskPolynomial<R> d_dzbar(const DiskPolynomial<R>& p) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : p.terms())
    if (k.n > 0) out.add({k.m, k.n - 1}, a * R(k.n));
  return out;
}

}  // namespace diskt
