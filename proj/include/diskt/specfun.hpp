#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace diskt {

struct SeriesConfig {
  double abs_tol = 1e-15;
  int max_terms = 1000;

  void validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("SeriesConfig: abs_tol must be positive");
    if (max_terms < 1) throw DomainError("SeriesConfig: max_terms must be at least 1");
  }
};

namespace detail {
inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }
inline bool near_integer(double x, double tol = 1e-12) { return std::abs(x - std::round(x)) <= tol; }
}  // namespace detail

inline double gamma(double x) {
  if (detail::is_nonpositive_integer(x)) throw PoleError("gamma: pole at " + std::to_string(x));
  return std::tgamma(x);
}

/// 1/Gamma(x), zero at the poles.
inline double rgamma(double x) {
  if (detail::is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

inline double digamma(double x) {
  if (detail::is_nonpositive_integer(x)) throw PoleError("digamma: pole at " + std::to_string(x));
  if (x < 0.5) return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
  double acc = 0.0;
  while (x < 16.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double x2 = 1.0 / (x * x);
  // Asymptotic series with Bernoulli coefficients B_2k / 2k.
  double tail =
      x2 * (1.0 / 12 - x2 * (1.0 / 120 - x2 * (1.0 / 252 - x2 * (1.0 / 240 - x2 * (1.0 / 132 - x2 * (691.0 / 32760 - x2 / 12))))));
  return acc + std::log(x) - 0.5 / x - tail;
}

inline double pochhammer(double q, int n) {
  if (n < 0) throw DomainError("pochhammer: negative n");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= q + k;
  return p;
}

/// J_alpha(x) from its power series. When the alternating series would lose
/// more than abs_tol to cancellation the value comes from std::cyl_bessel_j.
inline double bessel_j(double alpha, double x, const SeriesConfig& cfg = {}) {
  cfg.validate();
  if (alpha < 0.0) throw DomainError("bessel_j: negative order");
  if (x < 0.0) throw DomainError("bessel_j: negative argument");
  if (x == 0.0) return alpha == 0.0 ? 1.0 : 0.0;

  const long double h = 0.5L * x;
  const long double h2 = h * h;
  long double term = std::pow(h, static_cast<long double>(alpha)) / std::tgamma(static_cast<long double>(alpha) + 1.0L);
  long double sum = term;
  long double biggest = std::abs(term);
  bool converged = false;
  for (int k = 1; k <= cfg.max_terms; ++k) {
    term *= -h2 / (static_cast<long double>(k) * (k + alpha));
    sum += term;
    biggest = std::max(biggest, std::abs(term));
    if (k > h && std::abs(term) < 0.25L * cfg.abs_tol) {
      converged = true;
      break;
    }
  }
  const long double rounding = biggest * std::numeric_limits<long double>::epsilon() * 4;
  if (converged && rounding <= cfg.abs_tol) return static_cast<double>(sum);
  if (!converged && rounding <= cfg.abs_tol)
    throw ConvergenceError("bessel_j: series did not converge within max_terms");
  return std::cyl_bessel_j(alpha, x);
}

/// Smallest positive zero of J_d.
inline double bessel_zero(int d) {
  if (d < 0 || d > 20) throw DomainError("bessel_zero: order must lie in [0, 20]");
  auto f = [d](double x) { return bessel_j(d, x); };
  auto df = [d](double x) {
    return d == 0 ? -bessel_j(1, x) : bessel_j(d - 1, x) - d / x * bessel_j(d, x);
  };
  // J_d > 0 on (0, j_d) and j_d > d; step well below the zero spacing pi.
  const double step = std::numbers::pi / 4;
  double lo = d > 0 ? static_cast<double>(d) : 0.5;
  double flo = f(lo);
  double hi = lo + step;
  double fhi = f(hi);
  int guard = 0;
  while (flo * fhi > 0.0) {
    if (++guard > 100) throw ConvergenceError("bessel_zero: no sign change found");
    lo = hi;
    flo = fhi;
    hi += step;
    fhi = f(hi);
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    double newton = x - fx / df(x);
    double next = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-15 * x || hi - lo < 1e-14) return next;
    x = next;
  }
  throw ConvergenceError("bessel_zero: iteration cap reached");
}

namespace detail {

inline double hyp2f1_series(double a, double b, double c, double x, const SeriesConfig& cfg) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (term == 0.0) return sum;
    // Once the ratio has settled below one the remaining tail is bounded by a geometric series.
    double ratio = std::abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2.0)) * x);
    if (ratio < 1.0 && std::abs(term) * ratio / (1.0 - ratio) < cfg.abs_tol) return sum;
  }
  throw ConvergenceError("hyp2f1: series did not converge within max_terms");
}

// c - a - b = m, a non-negative integer; logarithmic case, expansion about x = 1.
inline double hyp2f1_log_case(double a, double b, int m, double x, const SeriesConfig& cfg) {
  const double c = a + b + m;
  const double y = 1.0 - x;
  double finite = 0.0;
  if (m > 0) {
    double t = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += t;
      t *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * y;
    }
    finite *= std::tgamma(static_cast<double>(m)) * gamma(c) * rgamma(a + m) * rgamma(b + m);
  }
  const double log_y = std::log(y);
  double coef = 1.0 / std::tgamma(m + 1.0);  // (a+m)_n (b+m)_n / (n! (n+m)!) at n = 0
  double psi_n1 = digamma(1.0), psi_nm1 = digamma(m + 1.0);
  double psi_a = digamma(a + m), psi_b = digamma(b + m);
  double sum = 0.0;
  double yn = 1.0;
  for (int n = 0; n < cfg.max_terms; ++n) {
    double term = coef * yn * (log_y - psi_n1 - psi_nm1 + psi_a + psi_b);
    sum += term;
    if (n > 2 && std::abs(term) < cfg.abs_tol * 1e-2) {
      double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (x - 1)^m = (-1)^m y^m
      return finite - sign * std::pow(y, m) * gamma(c) * rgamma(a) * rgamma(b) * sum;
    }
    coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0));
    psi_n1 += 1.0 / (n + 1.0);
    psi_nm1 += 1.0 / (n + m + 1.0);
    psi_a += 1.0 / (a + m + n);
    psi_b += 1.0 / (b + m + n);
    yn *= y;
  }
  throw ConvergenceError("hyp2f1: logarithmic expansion did not converge");
}

}  // namespace detail

/// Gauss hypergeometric 2F1(a, b; c; x) for x in [0, 1].
inline double hyp2f1(double a, double b, double c, double x, const SeriesConfig& cfg = {}) {
  cfg.validate();
  if (detail::is_nonpositive_integer(c)) throw PoleError("hyp2f1: c is a non-positive integer");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("hyp2f1: x must lie in [0, 1]");
  const double s = c - a - b;
  const bool terminating = detail::is_nonpositive_integer(a) || detail::is_nonpositive_integer(b);

  if (x == 1.0) {
    if (!(s > 0.0)) throw DomainError("hyp2f1: series diverges at x = 1 unless c - a - b > 0");
    return gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b);
  }
  if (x <= 0.5 || terminating) return detail::hyp2f1_series(a, b, c, x, cfg);

  if (detail::near_integer(s)) {
    const int m = static_cast<int>(std::lround(s));
    if (m >= 0) return detail::hyp2f1_log_case(a, b, m, x, cfg);
    // Euler transformation maps c - a - b to -m > 0.
    return std::pow(1.0 - x, s) * hyp2f1(c - a, c - b, c, x, cfg);
  }
  // Connection to the expansion about x = 1.
  const double y = 1.0 - x;
  double t1 = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b);
  if (t1 != 0.0) t1 *= detail::hyp2f1_series(a, b, 1.0 - s, y, cfg);
  double t2 = gamma(c) * gamma(-s) * rgamma(a) * rgamma(b);
  if (t2 != 0.0) t2 *= std::pow(y, s) * detail::hyp2f1_series(c - a, c - b, 1.0 + s, y, cfg);
  return t1 + t2;
}

/// Series form of E(m), valid for |m| < 1. Used as a cross-check.
inline double elliptic_e_series(double m, const SeriesConfig& cfg = {}) {
  cfg.validate();
  if (!(std::abs(m) < 1.0)) throw DomainError("elliptic_e_series: requires |m| < 1");
  double coef = 1.0, mn = 1.0, sum = 0.0;
  for (int n = 1; n <= cfg.max_terms; ++n) {
    coef *= (2.0 * n - 1.0) / (2.0 * n);
    mn *= m;
    double term = coef * coef * mn / (2.0 * n - 1.0);
    sum += term;
    if (std::abs(term) < cfg.abs_tol * 1e-2) return std::numbers::pi / 2 * (1.0 - sum);
  }
  throw ConvergenceError("elliptic_e_series: did not converge");
}

/// Complete elliptic integral of the second kind in the parameter m = k^2, by the
/// arithmetic-geometric mean. Negative m needs no transformation: c_0^2 = m.
inline double elliptic_e(double m) {
  if (std::isnan(m) || m > 1.0) throw DomainError("elliptic_e: parameter must not exceed 1");
  if (m == 1.0) return 1.0;
  double a = 1.0, b = std::sqrt(1.0 - m), sum = 0.5 * m, pow2 = 0.5;
  for (int n = 0; n < 64; ++n) {
    if (std::abs(a - b) <= 4 * std::numeric_limits<double>::epsilon() * a)
      return std::numbers::pi / (a + b) * (1.0 - sum);
    const double c = 0.5 * (a - b);
    pow2 *= 2.0;
    sum += pow2 * c * c;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  throw ConvergenceError("elliptic_e: AGM did not converge");
}

}  // namespace diskt
