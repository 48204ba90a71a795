#pragma once

// Galerkin estimates of operator norms on truncated monomial bases, the
// transcendental equations behind the L^2 norm of P, and Hardy-type ratios.

#include <Eigen/Sparse>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "diskalg.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "scalar.hpp"
#include "specfun.hpp"
#include "transforms.hpp"

namespace diskt {

struct TruncationSpec {
  int max_total_degree = 0;
  std::optional<std::set<int>> d_set;

  void validate() const {
    if (max_total_degree < 0) throw DomainError("TruncationSpec: max_total_degree must be >= 0");
  }

  bool admits(Monomial k) const {
    return k.degree() <= max_total_degree && (!d_set || d_set->count(k.rotation()) > 0);
  }

  /// Monomials z^m zbar^n with m + n <= max_total_degree and m - n in d_set, in (m, n) order.
  std::vector<Monomial> basis() const {
    validate();
    std::vector<Monomial> out;
    for (int m = 0; m <= max_total_degree; ++m)
      for (int n = 0; m + n <= max_total_degree; ++n)
        if (admits({m, n})) out.push_back({m, n});
    return out;
  }
};

/// Realified Galerkin matrix. Coordinate 2i is Re a_i and 2i + 1 is Im a_i for
/// basis element i; A maps input coordinates to output coordinates and the
/// Gram matrices carry Re<., .> in L^2(D, dA).
struct RealLinearOperatorMatrix {
  TransformKind kind{};
  TruncationSpec truncation;
  std::vector<Monomial> basis;
  std::vector<Monomial> out_basis;
  Eigen::SparseMatrix<double> A;
  Eigen::SparseMatrix<double> gram_in;
  Eigen::SparseMatrix<double> gram_out;
  /// Exact image of every input coordinate: column 2i is T[z^m zbar^n], 2i + 1 is T[i z^m zbar^n].
  std::vector<ExactPolynomial> columns;
};

struct NormEstimate {
  double value = 0.0;
  TruncationSpec truncation;
  double residual = 0.0;
  int iterations = 0;
  /// Top eigenvalue of T*T repeated within 1e-10.
  bool multiple = false;
  std::size_t blocks = 0;
};

namespace detail {

inline Rational gram_entry(Monomial a, Monomial b) {
  if (a.rotation() != b.rotation()) return Rational(0);
  return ratio<Rational>(1, a.m + b.n + 1);
}

inline Eigen::SparseMatrix<double> realified_gram(const std::vector<Monomial>& basis) {
  std::map<int, std::vector<int>> by_rotation;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) by_rotation[basis[i].rotation()].push_back(i);
  std::vector<Eigen::Triplet<double>> t;
  for (const auto& [d, idx] : by_rotation)
    for (int i : idx)
      for (int j : idx) {
        double g = to_double(gram_entry(basis[i], basis[j]));
        t.emplace_back(2 * i, 2 * j, g);
        t.emplace_back(2 * i + 1, 2 * j + 1, g);
      }
  const int n = 2 * static_cast<int>(basis.size());
  Eigen::SparseMatrix<double> g(n, n);
  g.setFromTriplets(t.begin(), t.end());
  return g;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline ExactPolynomial unit_input(Monomial k, int part) {
  return ExactPolynomial::monomial(k.m, k.n, part == 0 ? ExactComplex(1) : ExactComplex(Rational(0), Rational(1)));
}

struct BlockResult {
  std::vector<double> eigenvalues;
  double residual = 0.0;
  int sweeps = 0;
};

// Largest eigenvalues of K x = lambda G x on one block, whitened in high precision.
inline BlockResult solve_block(const std::vector<std::size_t>& cols, const std::vector<Monomial>& basis,
                               const std::vector<ExactPolynomial>& images, double tol) {
  const std::size_t s = cols.size();
  const mp_bitcnt_t bits = 128 + 12 * static_cast<mp_bitcnt_t>(s);
  const mpf_class zero(0, bits);
  Dense<mpf_class> g(s, s, zero), k(s, s, zero);
  bool any = false;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a; b < s; ++b) {
      const std::size_t ca = cols[a], cb = cols[b];
      Rational gab(0);
      if (ca % 2 == cb % 2) gab = gram_entry(basis[ca / 2], basis[cb / 2]);
      Rational kab = inner_product(images[ca], images[cb]).re;
      if (sgn(kab) != 0) any = true;
      g(a, b) = g(b, a) = mpf_class(gab, bits);
      k(a, b) = k(b, a) = mpf_class(kab, bits);
    }
  BlockResult out;
  if (!any) {
    out.eigenvalues.assign(s, 0.0);
    return out;
  }
  cholesky(g);
  Dense<mpf_class> m = whiten(g, k);
  Dense<double> md(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) md(i, j) = 0.5 * (m(i, j).get_d() + m(j, i).get_d());
  SymmetricEigen eig = jacobi_eigen(md, tol);
  out.eigenvalues = eig.values;
  out.sweeps = eig.sweeps;
  const double lam = eig.values.back();
  double r2 = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    double row = -lam * eig.vectors(i, s - 1);
    for (std::size_t j = 0; j < s; ++j) row += md(i, j) * eig.vectors(j, s - 1);
    r2 += row * row;
  }
  out.residual = std::sqrt(r2);
  return out;
}

}  // namespace detail

inline RealLinearOperatorMatrix assemble(TransformKind kind, const TruncationSpec& spec) {
  RealLinearOperatorMatrix opm;
  opm.kind = kind;
  opm.truncation = spec;
  opm.basis = spec.basis();
  if (opm.basis.empty()) throw DomainError("assemble: truncation selects no basis elements");
  const std::size_t n = opm.basis.size();
  opm.columns.resize(2 * n);
  parallel_for(2 * n, [&](std::size_t c) {
    opm.columns[c] = apply(kind, detail::unit_input(opm.basis[c / 2], static_cast<int>(c % 2)));
  });

  std::set<Monomial> out;
  for (const auto& col : opm.columns)
    for (const auto& [k, a] : col.terms()) out.insert(k);
  opm.out_basis.assign(out.begin(), out.end());
  std::map<Monomial, int> row_of;
  for (int i = 0; i < static_cast<int>(opm.out_basis.size()); ++i) row_of[opm.out_basis[i]] = i;

  std::vector<Eigen::Triplet<double>> t;
  for (int c = 0; c < static_cast<int>(2 * n); ++c)
    for (const auto& [k, a] : opm.columns[c].terms()) {
      const int r = row_of[k];
      if (sgn(a.re) != 0) t.emplace_back(2 * r, c, to_double(a.re));
      if (sgn(a.im) != 0) t.emplace_back(2 * r + 1, c, to_double(a.im));
    }
  opm.A.resize(2 * static_cast<int>(opm.out_basis.size()), 2 * static_cast<int>(n));
  opm.A.setFromTriplets(t.begin(), t.end());
  opm.gram_in = detail::realified_gram(opm.basis);
  opm.gram_out = detail::realified_gram(opm.out_basis);
  return opm;
}

/// sup ||A x||_out / ||x||_in. The problem splits into blocks that neither
/// Gram matrix nor the image inner products couple; each block is whitened in
/// multiprecision (the monomial Gram blocks are Hilbert-like) and solved with Jacobi.
inline NormEstimate operator_norm(const RealLinearOperatorMatrix& opm, double tol = 1e-15) {
  if (!(tol > 0.0)) throw DomainError("operator_norm: tolerance must be positive");
  const std::size_t ncols = opm.columns.size();
  detail::DisjointSets sets(ncols);
  std::map<std::pair<int, int>, std::size_t> in_key, out_key;
  for (std::size_t c = 0; c < ncols; ++c) {
    const int part = static_cast<int>(c % 2);
    auto [it, fresh] = in_key.try_emplace({opm.basis[c / 2].rotation(), part}, c);
    if (!fresh) sets.unite(c, it->second);
    for (const auto& [k, a] : opm.columns[c].terms()) {
      for (int p = 0; p < 2; ++p) {
        if (sgn(p == 0 ? a.re : a.im) == 0) continue;
        auto [jt, f2] = out_key.try_emplace({k.rotation(), p}, c);
        if (!f2) sets.unite(c, jt->second);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < ncols; ++c) groups[sets.find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [root, cols] : groups) blocks.push_back(std::move(cols));

  std::vector<detail::BlockResult> results(blocks.size());
  parallel_for(blocks.size(), [&](std::size_t b) {
    results[b] = detail::solve_block(blocks[b], opm.basis, opm.columns, tol);
  });

  NormEstimate est;
  est.truncation = opm.truncation;
  est.blocks = blocks.size();
  std::vector<double> all;
  double best = -1.0;
  for (const auto& r : results) {
    all.insert(all.end(), r.eigenvalues.begin(), r.eigenvalues.end());
    est.iterations += r.sweeps;
    if (!r.eigenvalues.empty() && r.eigenvalues.back() > best) {
      best = r.eigenvalues.back();
      est.residual = r.residual;
    }
  }
  std::sort(all.begin(), all.end());
  if (all.empty()) return est;
  const double top = std::max(0.0, all.back());
  est.value = std::sqrt(top);
  est.multiple = all.size() > 1 && top - all[all.size() - 2] < 1e-10;
  return est;
}

/// Galerkin lower bound for the L^2 norm of P on the given truncation.
inline NormEstimate estimate_P_norm(const TruncationSpec& spec, double tol = 1e-15) {
  return operator_norm(assemble(TransformKind::CauchyTransformP, spec), tol);
}

namespace detail {

// Bisection to a bracket of width ~1e-12, then Newton with a numerical derivative.
template <class F>
double bracketed_root(F f, double lo, double hi, double tol, const char* who) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw ConvergenceError(std::string(who) + ": no sign change in bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 20; ++it) {
    double fx = f(x);
    if (std::abs(fx) < 0.01 * tol) break;
    const double h = 1e-7;
    double dfx = (f(x + h) - f(x - h)) / (2 * h);
    double next = x - fx / dfx;
    if (!(next > lo - 1e-9 && next < hi + 1e-9)) break;
    x = next;
  }
  if (!(std::abs(f(x)) < tol)) throw ConvergenceError(std::string(who) + ": residual above tolerance");
  return x;
}

}  // namespace detail

/// Root of 2 J0(2/a) - a J1(2/a) = 0 in [1, 1.2].
inline double solve_alpha(double tol = 1e-13) {
  auto f = [](double a) { return 2.0 * bessel_j(0, 2.0 / a) - a * bessel_j(1, 2.0 / a); };
  return detail::bracketed_root(f, 1.0, 1.2, tol, "solve_alpha");
}

/// Left end of the bracket for delta: 2 / sqrt(3/2 + 2 / j1^2).
inline double delta_lower_bound() {
  const double j1 = bessel_zero(1);
  return 2.0 / std::sqrt(1.5 + 2.0 / (j1 * j1));
}

/// H(delta) = J1(delta) - delta J0(delta).
inline double delta_equation(double delta) { return bessel_j(1, delta) - delta * bessel_j(0, delta); }

/// Root of H(delta) = 0 in (2 / sqrt(3/2 + 2/j1^2), j0).
inline double solve_delta(double tol = 1e-13) {
  return detail::bracketed_root(delta_equation, delta_lower_bound(), bessel_zero(0), tol, "solve_delta");
}

/// Z(lambda) = X / Y for the restricted g0 + g2 problem, Bessel arguments 2 / sqrt(lambda).
inline double restricted_Z(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("restricted_Z: lambda must be positive");
  const double x = 2.0 / std::sqrt(lambda);
  const double j0 = bessel_j(0, x), j1 = bessel_j(1, x);
  if (j1 == 0.0) throw DomainError("restricted_Z: J1(2/sqrt(lambda)) vanishes");
  const double num = 2 * lambda * lambda * j0 * j0 - 2 * std::pow(lambda, 2.5) * j0 * j1 + 2 * lambda * lambda * j1 * j1;
  const double den = 2 * lambda * j0 * j0 + (2 - lambda) * lambda * j1 * j1;
  if (den == 0.0) throw DomainError("restricted_Z: denominator vanishes");
  return num / den;
}

/// Fixed point Z(lambda) = lambda in (4/j0^2, 3/2 + 2/j1^2).
inline double solve_lambda0(double tol = 1e-12) {
  const double j0 = bessel_zero(0), j1 = bessel_zero(1);
  return detail::bracketed_root([](double l) { return restricted_Z(l) - l; }, 4.0 / (j0 * j0),
                                1.5 + 2.0 / (j1 * j1), tol, "solve_lambda0");
}

// ---- Hardy-type ratios -------------------------------------------------------

namespace detail {

// c * r^s * (log r)^j
struct LogMonomial {
  ExactComplex c;
  int s;
  int j;
};

// Integral over [0, 1] of r^s (log r)^j = (-1)^j j! / (s+1)^{j+1}, s > -1.
inline Rational log_moment(int s, int j) {
  if (s <= -1) throw DomainError("hardy_ratio: divergent moment");
  mpz_class fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(s + 1), static_cast<unsigned long>(j + 1));
  Rational q(fact, den);
  q.canonicalize();
  return j % 2 ? Rational(-q) : q;
}

}  // namespace detail

/// Hardy ratio for the profile u(rho) = sum_k u[k] rho^k:
///   d <= 0:  int_0^1 |int_0^r rho^{1-d} u|^2 r^{2d-1} dr / int_0^1 rho |u|^2
///   d >= 1:  int_0^1 |int_r^1 rho^{1-d} u|^2 r^{2d-1} dr / int_0^1 rho |u|^2
/// computed exactly.
inline Rational hardy_ratio(int d, const std::vector<ExactComplex>& u) {
  using detail::LogMonomial;
  std::vector<LogMonomial> inner;  // the inner integral as a function of r
  for (int k = 0; k < static_cast<int>(u.size()); ++k) {
    if (u[k].is_zero()) continue;
    const int e = 2 - d + k;  // rho^{1-d+k} integrates to rho^e / e
    if (d <= 0) {
      inner.push_back({u[k] * ratio<Rational>(1, e), e, 0});
    } else if (e != 0) {
      inner.push_back({u[k] * ratio<Rational>(1, e), 0, 0});
      inner.push_back({u[k] * ratio<Rational>(-1, e), e, 0});
    } else {
      inner.push_back({-u[k], 0, 1});
    }
  }
  Rational den(0);
  for (int k = 0; k < static_cast<int>(u.size()); ++k)
    for (int l = 0; l < static_cast<int>(u.size()); ++l)
      if (!u[k].is_zero() && !u[l].is_zero()) den += (u[k] * conj(u[l])).re * ratio<Rational>(1, k + l + 2);
  if (sgn(den) == 0) throw DomainError("hardy_ratio: profile is identically zero");
  Rational num(0);
  for (const auto& a : inner)
    for (const auto& b : inner)
      num += (a.c * conj(b.c)).re * detail::log_moment(a.s + b.s + 2 * d - 1, a.j + b.j);
  Rational q = num / den;
  return q;
}

inline Rational hardy_ratio(int d, const std::vector<double>& u) {
  std::vector<ExactComplex> e;
  e.reserve(u.size());
  for (double x : u) e.emplace_back(Rational(x));
  return hardy_ratio(d, e);
}

/// Best constant: 1/j_{-d}^2 for d <= 0 and 1/j_{d-1}^2 for d >= 1.
inline double hardy_bound(int d) {
  const double j = d <= 0 ? bessel_zero(-d) : bessel_zero(d - 1);
  return 1.0 / (j * j);
}

/// Taylor coefficients in rho of J_nu(k rho) up to the given degree.
inline std::vector<double> bessel_taylor(int nu, double k, int degree) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  const double h = 0.5 * k;
  double term = std::pow(h, nu) / std::tgamma(nu + 1.0);  // m = 0
  for (int m = 0; 2 * m + nu <= degree; ++m) {
    c[2 * m + nu] = term;
    term *= -h * h / ((m + 1.0) * (m + 1.0 + nu));
  }
  return c;
}

/// Extremal profile of the Hardy inequality truncated to a polynomial:
/// J_{|d|}(j_{|d|} rho) for d <= 0 and J_d(j_{d-1} rho) for d >= 1.
inline std::vector<double> bessel_trial_profile(int d, int degree = 30) {
  if (d <= 0) return bessel_taylor(-d, bessel_zero(-d), degree);
  return bessel_taylor(d, bessel_zero(d - 1), degree);
}

// ---- extremal function of the L^2 problem --------------------------------------

/// Polynomial truncation (total degree <= degree) of phi0 = f0(r) + f2(r) e^{2it} with
/// f_nu(r) = 2 J_nu(2r/sqrt(lambda0)) / (sqrt(lambda0) J1(2/sqrt(lambda0))), nu = 0, 2.
inline ExactPolynomial extremal_phi0(int degree) {
  const double alpha = solve_alpha();
  const double k = 2.0 / alpha;  // lambda0 = alpha^2
  const double scale = 2.0 / (alpha * bessel_j(1, k));
  ExactPolynomial p;
  const std::vector<double> f0 = bessel_taylor(0, k, degree), f2 = bessel_taylor(2, k, degree);
  // rho^{2j} -> z^j zbar^j ; rho^{2j+2} e^{2it} -> z^{j+2} zbar^j
  for (int j = 0; 2 * j <= degree; ++j) p.add({j, j}, ExactComplex(Rational(scale * f0[2 * j])));
  for (int j = 0; 2 * j + 2 <= degree; ++j) p.add({j + 2, j}, ExactComplex(Rational(scale * f2[2 * j + 2])));
  return p;
}

/// ||P[phi]|| / ||phi|| for the truncated extremal function.
inline double extremal_phi0_ratio(int degree) {
  if (degree < 4) throw DomainError("extremal_phi0_ratio: degree must be at least 4");
  const ExactPolynomial p = extremal_phi0(degree);
  const Rational q = norm_sq(cauchy_P(p)) / norm_sq(p);
  return std::sqrt(q.get_d());
}

}  // namespace diskt
