#pragma once

// Quadrature evaluation of the defining kernel integrals. Nothing here uses the
// closed forms from transforms.hpp; the two are meant to be compared.
//
// Disk integrals use polar coordinates centered at a chosen point c:
//   w = c + s e^{i psi},  0 <= s <= S(psi),  dA = s ds dpsi / pi,
// where S(psi) is the distance from c to the unit circle along direction psi.
// Centering at a kernel singularity cancels a 1/|w - c| factor exactly.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>

#include "diskalg.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "transforms.hpp"

namespace diskt {

using cplx = std::complex<double>;

struct QuadResult {
  cplx value;
  double err_estimate = 0.0;
  long evaluations = 0;
};

struct DiskQuadOptions {
  double tol = 1e-8;
  long budget = 2'000'000;
  /// Polar center; 0 by default. May lie on the unit circle.
  cplx center = 0.0;
  /// Radial grading s = S u^gamma; gamma > 1 clusters nodes at the center.
  double grading = 1.0;
  /// Integrate only over s >= inner_radius (a disk around the center is excluded).
  double inner_radius = 0.0;
};

/// Distance from c (|c| <= 1) to the unit circle in direction psi.
inline double boundary_distance(cplx c, double psi) {
  const double beta = c.real() * std::cos(psi) + c.imag() * std::sin(psi);
  const double gap = std::max(0.0, 1.0 - std::norm(c));
  const double root = std::sqrt(beta * beta + gap);
  // Stable form of -beta + root when beta > 0.
  return beta > 0.0 ? gap / (beta + root) : root - beta;
}

/// Integral of f over the unit disk against normalized area measure.
inline QuadResult quad_disk(const std::function<cplx(cplx)>& f, const DiskQuadOptions& opt = {}) {
  if (!(opt.tol > 0.0)) throw DomainError("quad_disk: tolerance must be positive");
  if (!(opt.grading >= 1.0)) throw DomainError("quad_disk: grading must be >= 1");
  const cplx c = opt.center;
  const double rc = std::abs(c);
  if (rc > 1.0 + 1e-14) throw DomainError("quad_disk: center outside the closed disk");

  double psi0 = 0.0, psi1 = 2.0 * std::numbers::pi;
  if (rc > 1.0 - 1e-14) {
    // Boundary center: the disk lies in the half plane facing -c.
    const double th = std::arg(c);
    psi0 = th + std::numbers::pi / 2;
    psi1 = th + 3 * std::numbers::pi / 2;
  }
  const double g = opt.grading;
  const double eps = opt.inner_radius;
  auto integrand = [&](double u, double psi) -> cplx {
    const double S = boundary_distance(c, psi);
    if (S <= eps) return 0.0;
    const double span = S - eps;
    const double ug = g == 1.0 ? u : std::pow(u, g);
    const double s = eps + span * ug;
    const double ds = span * (g == 1.0 ? 1.0 : g * std::pow(u, g - 1.0));
    if (s == 0.0) return 0.0;
    const cplx w = c + std::polar(s, psi);
    return f(w) * (s * ds / std::numbers::pi);
  };
  QuadOptions qo;
  qo.abs_tol = opt.tol;
  qo.max_evals = opt.budget;
  auto r = integrate2d(integrand, 0.0, 1.0, psi0, psi1, qo);
  return {r.value, r.error, r.evaluations};
}

namespace oracle {

inline DiskQuadOptions at(cplx center, double tol, long budget) {
  DiskQuadOptions o;
  o.center = center;
  o.tol = tol;
  o.budget = budget;
  return o;
}

inline void require_interior(cplx z, const char* who) {
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(who) + ": point must lie in the open disk");
}

}  // namespace oracle

/// C[phi](z) = integral of phi(w) / (w - z) dA(w), centered at z.
template <RealField R>
QuadResult cauchy_eval(const DiskPolynomial<R>& phi, cplx z, double tol = 1e-8, long budget = 2'000'000) {
  oracle::require_interior(z, "cauchy_eval");
  auto f = [&](cplx w) { return evaluate(phi, w) / (w - z); };
  return quad_disk(f, oracle::at(z, tol, budget));
}

/// J0[psi](z) = integral of z psi(w) / (1 - conj(w) z) dA(w).
template <RealField R>
QuadResult j0_eval(const DiskPolynomial<R>& psi, cplx z, double tol = 1e-8, long budget = 2'000'000) {
  oracle::require_interior(z, "j0_eval");
  auto f = [&](cplx w) { return z * evaluate(psi, w) / (1.0 - std::conj(w) * z); };
  return quad_disk(f, oracle::at(0.0, tol, budget));
}

/// J0*[phi](z) = integral of conj(w) phi(w) / (1 - conj(w) z) dA(w).
template <RealField R>
QuadResult j0_star_eval(const DiskPolynomial<R>& phi, cplx z, double tol = 1e-8, long budget = 2'000'000) {
  oracle::require_interior(z, "j0_star_eval");
  auto f = [&](cplx w) { return std::conj(w) * evaluate(phi, w) / (1.0 - std::conj(w) * z); };
  return quad_disk(f, oracle::at(0.0, tol, budget));
}

/// Bergman projection: integral of psi(w) / (1 - z conj(w))^2 dA(w).
template <RealField R>
QuadResult bergman_eval(const DiskPolynomial<R>& psi, cplx z, double tol = 1e-8, long budget = 2'000'000) {
  oracle::require_interior(z, "bergman_eval");
  auto f = [&](cplx w) {
    cplx k = 1.0 - z * std::conj(w);
    return evaluate(psi, w) / (k * k);
  };
  return quad_disk(f, oracle::at(0.0, tol, budget));
}

/// Principal value S[phi](z) = -p.v. integral of phi(w) / (z - w)^2 dA(w).
///
/// phi(z) is subtracted; its own principal value over the disk reduces to
///   (phi(z) / pi) * integral of e^{-2 i psi} log S(psi) dpsi
/// because the log(eps) part integrates to zero in psi. The remainder is
/// integrated outside a disk of radius eps around z; its eps-dependence is a
/// series in eps^2, which Richardson extrapolation removes.
template <RealField R>
QuadResult pv_beurling_eval(const DiskPolynomial<R>& phi, cplx z, double tol = 1e-8, long budget = 2'000'000) {
  oracle::require_interior(z, "pv_beurling_eval");
  const cplx pz = evaluate(phi, z);
  long evals = 0;
  double err = 0.0;

  QuadOptions qo;
  qo.abs_tol = tol * 0.1;
  qo.max_evals = budget;
  auto ring = integrate(
      [&](double psi) { return std::exp(cplx(0.0, -2.0 * psi)) * std::log(boundary_distance(z, psi)); }, 0.0,
      2.0 * std::numbers::pi, qo);
  const cplx smooth_part = pz * ring.value / std::numbers::pi;
  evals += ring.evaluations;
  err += std::abs(pz) * ring.error / std::numbers::pi;

  auto remainder = [&](cplx w) {
    cplx dw = z - w;
    return (evaluate(phi, w) - pz) / (dw * dw);
  };
  constexpr int levels = 4;
  std::array<std::array<cplx, levels>, levels> T{};
  const double eps0 = 0.25 * (1.0 - std::abs(z));
  for (int k = 0; k < levels; ++k) {
    DiskQuadOptions o = oracle::at(z, tol * 0.1, budget);
    o.inner_radius = eps0 * std::ldexp(1.0, -k);
    QuadResult q = quad_disk(remainder, o);
    evals += q.evaluations;
    err += q.err_estimate;
    T[k][0] = q.value;
    for (int j = 1; j <= k; ++j) {
      const double f = std::ldexp(1.0, 2 * j);  // 4^j
      T[k][j] = (f * T[k][j - 1] - T[k - 1][j - 1]) / (f - 1.0);
    }
  }
  const double spread = std::abs(T[levels - 1][levels - 1] - T[levels - 2][levels - 2]);
  if (spread > std::max(100.0 * tol, 1e-6))
    throw ConvergenceError("pv_beurling_eval: extrapolants disagree by " + std::to_string(spread));
  const cplx value = -(smooth_part + T[levels - 1][levels - 1]);
  return {value, err + spread, evals};
}

/// Integral of (phi(w) / (2w) - conj(phi(w)) / (2 conj(w))) dA(w): the constant
/// added to P to obtain the Hengartner-Schober operator T.
template <RealField R>
QuadResult t_constant_eval(const DiskPolynomial<R>& phi, double tol = 1e-8, long budget = 2'000'000) {
  auto f = [&](cplx w) {
    cplx v = evaluate(phi, w);
    return v / (2.0 * w) - std::conj(v) / (2.0 * std::conj(w));
  };
  return quad_disk(f, oracle::at(0.0, tol, budget));
}

/// Quadrature value of any closed-form operator at z. P, H and T are built
/// from the primitive kernel integrals.
template <RealField R>
QuadResult oracle_eval(TransformKind kind, const DiskPolynomial<R>& phi, cplx z, double tol = 1e-8,
                       long budget = 2'000'000) {
  auto combine = [](QuadResult a, QuadResult b, double sa, double sb) {
    return QuadResult{sa * a.value + sb * b.value, a.err_estimate + b.err_estimate, a.evaluations + b.evaluations};
  };
  switch (kind) {
    case TransformKind::CauchyIntegral: return cauchy_eval(phi, z, tol, budget);
    case TransformKind::J0: return j0_eval(phi, z, tol, budget);
    case TransformKind::J0Star: return j0_star_eval(phi, z, tol, budget);
    case TransformKind::BeurlingS: return pv_beurling_eval(phi, z, tol, budget);
    case TransformKind::BergmanB: return bergman_eval(phi, z, tol, budget);
    case TransformKind::CauchyTransformP:
      return combine(cauchy_eval(phi, z, tol, budget), j0_eval(conj(phi), z, tol, budget), -1.0, -1.0);
    case TransformKind::BeurlingH:
      return combine(pv_beurling_eval(phi, z, tol, budget), bergman_eval(conj(phi), z, tol, budget), 1.0, -1.0);
    case TransformKind::HengartnerSchoberT: {
      QuadResult p = oracle_eval(TransformKind::CauchyTransformP, phi, z, tol, budget);
      QuadResult c = t_constant_eval(phi, tol, budget);
      return combine(p, c, 1.0, 1.0);
    }
  }
  throw std::logic_error("oracle_eval: unhandled TransformKind");
}

/// (integral of |f|^p dA)^{1/p}, with quadrature options for singular integrands.
inline double lp_norm_numeric(const std::function<cplx(cplx)>& f, double p, const DiskQuadOptions& opt = {}) {
  if (!(p >= 1.0)) throw DomainError("lp_norm_numeric: p must be >= 1");
  auto g = [&](cplx w) { return cplx(std::pow(std::abs(f(w)), p), 0.0); };
  return std::pow(quad_disk(g, opt).value.real(), 1.0 / p);
}

/// Both sides of
///   (1/2pi) int_0^{2pi} |1 - r e^{it}|^{-2 beta} dt = sum_n (Gamma(n+beta) / (n! Gamma(beta)))^2 r^{2n}.
inline std::pair<double, double> angular_parseval_check(double beta, double r, double tol = 1e-12) {
  if (!(beta > 0.0)) throw DomainError("angular_parseval_check: beta must be positive");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("angular_parseval_check: r must lie in [0, 1)");
  QuadOptions qo;
  qo.abs_tol = tol;
  // The peak sits at t = 0; integrating over (-pi, pi) keeps it at the panel midpoint.
  auto lhs = integrate(
      [&](double t) { return std::pow(std::abs(1.0 - std::polar(r, t)), -2.0 * beta); }, -std::numbers::pi,
      std::numbers::pi, qo);
  double coef = 1.0, r2n = 1.0, rhs = 0.0;
  for (int n = 0; n < 1'000'000; ++n) {
    double term = coef * coef * r2n;
    rhs += term;
    if (term < tol * 1e-3 * (1.0 - r * r)) return {lhs.value / (2.0 * std::numbers::pi), rhs};
    coef *= (n + beta) / (n + 1.0);
    r2n *= r * r;
  }
  throw ConvergenceError("angular_parseval_check: series did not converge");
}

}  // namespace diskt
