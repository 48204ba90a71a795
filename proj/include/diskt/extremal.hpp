#pragma once

// L^p -> L^infinity norms of P, the Riesz-Thorin interpolation bound, the L^1
// integrals at the origin and on a grid, and the p = 2 counterexample.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "spectral.hpp"

namespace diskt {

/// p in (2, inf] with its conjugate q = p / (p - 1) in [1, 2).
struct ExponentPair {
  double p = std::numeric_limits<double>::infinity();
  double q = 1.0;

  static ExponentPair from_p(double p) {
    if (std::isnan(p) || !(p > 2.0))
      throw DomainError("ExponentPair: P does not map L^p into L^infinity for p <= 2");
    return {p, std::isinf(p) ? 1.0 : p / (p - 1.0)};
  }
  bool infinite() const { return std::isinf(p); }
};

/// Phi(t) = 2/(2-q) 2F1(q/2, q/2-1; 1; t) + 2F1(q/2, q/2; 2; t) t^{q/2}.
inline double phi_fn(double q, double t) {
  if (!(q >= 1.0 && q < 2.0)) throw DomainError("phi_fn: q must lie in [1, 2)");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("phi_fn: t must lie in [0, 1]");
  const double h = q / 2;
  return 2.0 / (2.0 - q) * hyp2f1(h, h - 1.0, 1.0, t) + hyp2f1(h, h, 2.0, t) * std::pow(t, h);
}

/// Gamma(2-q) / Gamma(2-q/2)^2, the value of int |1-w|^{-q} dA.
inline double gamma_ratio(double q) {
  const double g = gamma(2.0 - q / 2);
  return gamma(2.0 - q) / (g * g);
}

/// ||P||_{L^p -> L^inf} = 2 (Gamma(2-q) / Gamma(2-q/2)^2)^{1/q}.
inline double norm_p_to_inf(double p) {
  const auto e = ExponentPair::from_p(p);
  return 2.0 * std::pow(gamma_ratio(e.q), 1.0 / e.q);
}

/// Whether Phi is nondecreasing on a uniform grid of [0, 1], up to -1e-10.
inline bool monotonicity_scan(double q, int grid_size) {
  if (grid_size < 2) throw DomainError("monotonicity_scan: grid_size must be >= 2");
  double prev = phi_fn(q, 0.0);
  for (int i = 1; i < grid_size; ++i) {
    const double cur = phi_fn(q, i == grid_size - 1 ? 1.0 : double(i) / (grid_size - 1));
    if (cur - prev < -1e-10) return false;
    prev = cur;
  }
  return true;
}

/// phi_0(w) = i (1 - w) / |1 - w|^{1 + q/p}.
inline cplx extremal_phi0_pinf(const ExponentPair& e, cplx w) {
  const cplx d = 1.0 - w;
  const double a = std::abs(d);
  if (a == 0.0) return 0.0;
  const double expo = e.infinite() ? 1.0 : 1.0 + e.q / e.p;
  return cplx(0.0, 1.0) * d / std::pow(a, expo);
}

/// |P[phi_0](z)| / ||phi_0||_p. The numerator is computed by quadrature centered at
/// z; the denominator uses its closed form.
inline double extremal_ratio_pinf(double p, cplx z, double tol = 1e-7, long budget = 4'000'000) {
  const auto e = ExponentPair::from_p(p);
  oracle::require_interior(z, "extremal_ratio_pinf");
  auto f = [&](cplx w) {
    const cplx phi = extremal_phi0_pinf(e, w);
    return -(phi / (w - z) + z * std::conj(phi) / (1.0 - std::conj(w) * z));
  };
  auto opt = oracle::at(z, tol, budget);
  const double num = std::abs(quad_disk(f, opt).value);
  const double den = e.infinite() ? 1.0 : std::pow(gamma_ratio(e.q), 1.0 / e.p);
  return num / den;
}

/// alpha^{2/p} (8/pi)^{1-2/p} for p in [2, inf].
inline double riesz_thorin_bound(double p, double alpha) {
  if (std::isnan(p) || !(p >= 2.0)) throw DomainError("riesz_thorin_bound: p must be >= 2");
  const double s = std::isinf(p) ? 0.0 : 2.0 / p;
  return std::pow(alpha, s) * std::pow(8.0 / std::numbers::pi, 1.0 - s);
}

inline double riesz_thorin_bound(double p) { return riesz_thorin_bound(p, solve_alpha()); }

struct L1Result {
  double value = 0.0;
  double err_estimate = 0.0;
  long evaluations = 0;
};

/// Upper end of the radial integral; the remaining sliver contributes its limit value 4.
inline constexpr double kL1Clamp = 1e-8;

/// (2/pi) int_0^1 (1-r^2) E(-4r^2/(1-r^2)^2) + (1+r^2) E(4r^2/(1+r^2)^2) dr.
inline L1Result l1_at_zero(double tol = 1e-10) {
  auto integrand = [](double r) {
    const double a = 1.0 - r * r, b = 1.0 + r * r;
    return a * elliptic_e(-4.0 * r * r / (a * a)) + b * elliptic_e(4.0 * r * r / (b * b));
  };
  QuadOptions qo;
  qo.abs_tol = tol;
  auto r = integrate(integrand, 0.0, 1.0 - kL1Clamp, qo);
  const double tail = 4.0 * kL1Clamp;
  return {2.0 / std::numbers::pi * (r.value + tail), 2.0 / std::numbers::pi * r.error, r.evaluations};
}

/// int |z - 1/z| dA by 2-D quadrature centered at the origin.
inline L1Result l1_direct_2d(double tol = 1e-9, long budget = 4'000'000) {
  auto f = [](cplx z) { return cplx(std::abs(z - 1.0 / z), 0.0); };
  auto q = quad_disk(f, oracle::at(0.0, tol, budget));
  return {q.value.real(), q.err_estimate, q.evaluations};
}

/// F(w) = int |1/(w-z) + z/(1 - conj(w) z)| dA(z).
inline L1Result l1_integrand(cplx w, double tol = 1e-8, long budget = 4'000'000) {
  oracle::require_interior(w, "l1_integrand");
  auto f = [w](cplx z) { return cplx(std::abs(1.0 / (w - z) + z / (1.0 - std::conj(w) * z)), 0.0); };
  auto q = quad_disk(f, oracle::at(w, tol, budget));
  return {q.value.real(), q.err_estimate, q.evaluations};
}

struct L1ScanRow {
  cplx w;
  double value = 0.0;
  double err_estimate = 0.0;
};

struct L1Scan {
  std::vector<L1ScanRow> rows;
  std::size_t argmax = 0;
};

/// F on every grid point, evaluated in parallel. The argmax is reported, not asserted.
inline L1Scan l1_integrand_scan(const std::vector<cplx>& grid, double tol = 1e-8, long budget = 4'000'000) {
  for (cplx w : grid) oracle::require_interior(w, "l1_integrand_scan");
  L1Scan out;
  out.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    auto r = l1_integrand(grid[i], tol, budget);
    out.rows[i] = {grid[i], r.value, r.err_estimate};
  });
  for (std::size_t i = 1; i < out.rows.size(); ++i)
    if (out.rows[i].value > out.rows[out.argmax].value) out.argmax = i;
  return out;
}

/// Radial grid w = k * step, k = 0..count-1, with step = 0.2 by default.
inline std::vector<cplx> radial_grid(int count, double step = 0.2) {
  if (count < 1 || !(step > 0.0) || (count - 1) * step >= 1.0) throw DomainError("radial_grid: points must be interior");
  std::vector<cplx> g;
  for (int k = 0; k < count; ++k) g.emplace_back(k * step, 0.0);
  return g;
}

struct AnnulusRow {
  double eps = 0.0;
  double value = 0.0;
  double closed_form = 0.0;
};

struct CounterexampleReport {
  double norm_sq = 0.0;               // 2 int_0^1 dr / (r log^2(2/r)), by quadrature
  double norm_sq_expected = 0.0;      // 2 / log 2
  double truncated_quadrature = 0.0;  // same integral over [eps_min, 1], direct in r
  double truncated_antiderivative = 0.0;
  std::vector<AnnulusRow> annuli;  // 2 int_eps^1 dr / (r log(2/r))
  bool strictly_increasing = false;
};

/// phi_0(w) = w / (|w|^2 log(2/|w|)) lies in L^2 while |P[phi_0](0)| diverges.
inline CounterexampleReport counterexample_p2(double tol = 1e-13) {
  const double ln2 = std::numbers::ln2;
  QuadOptions qo;
  qo.abs_tol = tol;
  CounterexampleReport rep;
  rep.norm_sq_expected = 2.0 / ln2;
  // x = log(2/r) = log 2 + (1-t)/t maps (0, 1] onto [log 2, inf).
  rep.norm_sq = integrate([&](double t) {
                  const double d = t * ln2 + 1.0 - t;
                  return 2.0 / (d * d);
                }, 0.0, 1.0, qo).value;

  const double eps_min = 1e-8;
  auto antiderivative = [](double r) { return 2.0 / std::log(2.0 / r); };
  rep.truncated_antiderivative = antiderivative(1.0) - antiderivative(eps_min);
  // Direct radial quadrature in log r, where the integrand is smooth.
  rep.truncated_quadrature = integrate([](double u) {
                               const double l = std::log(2.0) - u;
                               return 2.0 / (l * l);
                             }, std::log(eps_min), 0.0, qo).value;

  double prev = -1.0;
  rep.strictly_increasing = true;
  for (int k = 1; k <= 8; ++k) {
    const double eps = std::pow(10.0, -k);
    const double top = std::log(2.0 / eps);
    const double v = integrate([](double x) { return 2.0 / x; }, ln2, top, qo).value;
    rep.annuli.push_back({eps, v, 2.0 * (std::log(top) - std::log(ln2))});
    if (!(v > prev)) rep.strictly_increasing = false;
    prev = v;
  }
  return rep;
}

}  // namespace diskt
