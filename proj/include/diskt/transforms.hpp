#pragma once

// Closed-form action of the disk operators on polynomials in (z, zbar).
//
// Each operator is applied term by term. Wherever a formula produces
// z^{j} |z|^{2k} with j < 0 it is rewritten as z^{j+k} zbar^{k}, so outputs
// never carry negative exponents.

#include <stdexcept>
#include <string>
#include <string_view>

#include "diskalg.hpp"
#include "errors.hpp"
#include "scalar.hpp"

namespace diskt {

enum class TransformKind {
  CauchyIntegral,      // C
  J0,                  // J0
  J0Star,              // J0star
  CauchyTransformP,    // P
  BeurlingS,           // S
  BergmanB,            // B
  BeurlingH,           // H
  HengartnerSchoberT,  // T
};

inline constexpr TransformKind kAllTransforms[] = {
    TransformKind::CauchyIntegral, TransformKind::J0,       TransformKind::J0Star,
    TransformKind::CauchyTransformP, TransformKind::BeurlingS, TransformKind::BergmanB,
    TransformKind::BeurlingH,      TransformKind::HengartnerSchoberT};

inline std::string_view name(TransformKind k) {
  switch (k) {
    case TransformKind::CauchyIntegral: return "C";
    case TransformKind::J0: return "J0";
    case TransformKind::J0Star: return "J0star";
    case TransformKind::CauchyTransformP: return "P";
    case TransformKind::BeurlingS: return "S";
    case TransformKind::BergmanB: return "B";
    case TransformKind::BeurlingH: return "H";
    case TransformKind::HengartnerSchoberT: return "T";
  }
  return "?";
}

inline TransformKind parse_transform(std::string_view s) {
  for (auto k : kAllTransforms)
    if (name(k) == s) return k;
  throw DomainError("unknown operator '" + std::string(s) + "' (expected one of C J0 J0star P S B H T)");
}

/// Cauchy integral: integral of phi(w) / (w - z) dA(w).
template <RealField R>
DiskPolynomial<R> cauchy_integral(const DiskPolynomial<R>& phi) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : phi.terms()) {
    const auto c = a * ratio<R>(1, k.n + 1);
    out.add({k.m, k.n + 1}, -c);
    if (k.m > k.n) out.add({k.m - k.n - 1, 0}, c);
  }
  return out;
}

/// J0[psi](z) = integral of z psi(w) / (1 - conj(w) z) dA(w).
template <RealField R>
DiskPolynomial<R> j0(const DiskPolynomial<R>& psi) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : psi.terms())
    if (k.m >= k.n) out.add({k.m - k.n + 1, 0}, a * ratio<R>(1, k.m + 1));
  return out;
}

/// J0 applied to the conjugate of a component, J0[conj(g_d)]; zero for d >= 1.
template <RealField R>
DiskPolynomial<R> j0_op_conj(const AngularComponent<R>& g) {
  return j0(conj(g.to_polynomial()));
}

/// J0*[phi](z) = integral of conj(w) phi(w) / (1 - conj(w) z) dA(w).
template <RealField R>
DiskPolynomial<R> j0_star(const DiskPolynomial<R>& phi) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : phi.terms())
    if (k.m >= k.n + 1) out.add({k.m - k.n - 1, 0}, a * ratio<R>(1, k.m + 1));
  return out;
}

/// Cauchy transform P, from the per-monomial formula.
template <RealField R>
DiskPolynomial<R> cauchy_P(const DiskPolynomial<R>& phi) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : phi.terms()) {
    const R w = ratio<R>(1, k.n + 1);
    out.add({k.m, k.n + 1}, a * w);
    if (k.m > k.n)
      out.add({k.m - k.n - 1, 0}, -(a * w));
    else
      out.add({k.n - k.m + 1, 0}, -(conj(a) * w));
  }
  return out;
}

/// P assembled as -C[phi] - J0[conj(phi)].
template <RealField R>
DiskPolynomial<R> cauchy_P_split(const DiskPolynomial<R>& phi) {
  return -cauchy_integral(phi) - j0(conj(phi));
}

/// P[g_d] through the radial representation
///   d <= 0:  2 z^{d-1} int_0^{|z|} rho^{1-d} f_d  -  2 z^{1-d} int_0^1 rho^{1-d} conj(f_d)
///   d >= 1: -2 z^{d-1} int_{|z|}^1 rho^{1-d} f_d
template <RealField R>
DiskPolynomial<R> radial_P_gd(const AngularComponent<R>& g) {
  const int d = g.d;
  DiskPolynomial<R> out;
  // Adds c * z^j |z|^{2k} = c * z^{j+k} zbar^k.
  auto add_radial = [&out](int j, int k, const Complex<R>& c) {
    if (j + k < 0) throw DomainError("radial_P_gd: term is singular at the origin");
    out.add({j + k, k}, c);
  };
  for (const auto& [n, b] : g.b) {
    // rho^{1-d} f_d contributes b_n rho^{2n+1}; its antiderivative is rho^{2n+2} / (2n+2).
    const int e = 2 * n + 2;
    const R two_over_e = ratio<R>(2, e);
    if (d >= 1) {
      // -2 z^{d-1} (1 - |z|^e) / e
      add_radial(d - 1, 0, -(b * two_over_e));
      add_radial(d - 1, e / 2, b * two_over_e);
    } else {
      add_radial(d - 1, e / 2, b * two_over_e);
      add_radial(1 - d, 0, -(conj(b) * two_over_e));
    }
  }
  return out;
}

/// Beurling transform S (principal value of -integral phi(w) / (z - w)^2 dA).
template <RealField R>
DiskPolynomial<R> beurling_S(const DiskPolynomial<R>& phi) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : phi.terms()) {
    if (k.m > 0) out.add({k.m - 1, k.n + 1}, a * ratio<R>(k.m, k.n + 1));
    if (k.m - k.n > 1) out.add({k.m - k.n - 2, 0}, -(a * ratio<R>(k.m - k.n - 1, k.n + 1)));
  }
  return out;
}

/// Bergman projection onto analytic polynomials.
template <RealField R>
DiskPolynomial<R> bergman_B(const DiskPolynomial<R>& psi) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : psi.terms())
    if (k.m >= k.n) out.add({k.m - k.n, 0}, a * ratio<R>(k.m - k.n + 1, k.m + 1));
  return out;
}

/// Beurling transform H = d/dz P, from the per-monomial formula.
template <RealField R>
DiskPolynomial<R> beurling_H(const DiskPolynomial<R>& phi) {
  DiskPolynomial<R> out;
  for (const auto& [k, a] : phi.terms()) {
    if (k.m > 0) out.add({k.m - 1, k.n + 1}, a * ratio<R>(k.m, k.n + 1));
    const int s = k.m - k.n;
    if (s > 1)
      out.add({s - 2, 0}, -(a * ratio<R>(s - 1, k.n + 1)));
    else if (s < 1)
      out.add({-s, 0}, -(conj(a) * ratio<R>(1 - s, k.n + 1)));
  }
  return out;
}

/// H assembled as S[phi] - B[conj(phi)].
template <RealField R>
DiskPolynomial<R> beurling_H_split(const DiskPolynomial<R>& phi) {
  return beurling_S(phi) - bergman_B(conj(phi));
}

/// The constant integral of (phi(w) / (2w) - conj(phi(w)) / (2 conj(w))) dA(w).
/// Only terms with m = n + 1 contribute, each (a - conj(a)) / (2m).
template <RealField R>
Complex<R> t_hs_constant(const DiskPolynomial<R>& phi) {
  Complex<R> c;
  for (const auto& [k, a] : phi.terms())
    if (k.m == k.n + 1) c += (a - conj(a)) * ratio<R>(1, 2 * k.m);
  return c;
}

/// Hengartner-Schober operator T = P + constant.
template <RealField R>
DiskPolynomial<R> t_hs(const DiskPolynomial<R>& phi) {
  return cauchy_P(phi) + DiskPolynomial<R>(t_hs_constant(phi));
}

template <RealField R>
DiskPolynomial<R> apply(TransformKind kind, const DiskPolynomial<R>& phi) {
  switch (kind) {
    case TransformKind::CauchyIntegral: return cauchy_integral(phi);
    case TransformKind::J0: return j0(phi);
    case TransformKind::J0Star: return j0_star(phi);
    case TransformKind::CauchyTransformP: return cauchy_P(phi);
    case TransformKind::BeurlingS: return beurling_S(phi);
    case TransformKind::BergmanB: return bergman_B(phi);
    case TransformKind::BeurlingH: return beurling_H(phi);
    case TransformKind::HengartnerSchoberT: return t_hs(phi);
  }
  throw std::logic_error("apply: unhandled TransformKind");
}

/// True when the operator conjugates its input (real-linear only).
inline bool conjugates_input(TransformKind kind) {
  return kind == TransformKind::CauchyTransformP || kind == TransformKind::BeurlingH ||
         kind == TransformKind::HengartnerSchoberT;
}

}  // namespace diskt
