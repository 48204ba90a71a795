#pragma once

// Scalar fields used by the polynomial algebra: `double` for floating work and
// `Rational` (GMP mpq) for exact identity checks. Complex<R> is a minimal
// complex type over either field; std::complex is only defined for floating
// point types, so it cannot carry rationals.

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <ostream>
#include <string>
#include <type_traits>

namespace diskt {

using Rational = mpq_class;

template <class R>
concept RealField = std::same_as<R, double> || std::same_as<R, Rational>;

/// Exact quotient num/den in the field R.
template <RealField R>
R ratio(long num, long den) {
  if constexpr (std::same_as<R, double>) {
    return static_cast<double>(num) / static_cast<double>(den);
  } else {
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
  }
}

template <RealField R>
R from_double(double x) {
  if constexpr (std::same_as<R, double>) {
    return x;
  } else {
    return Rational(x);  // exact binary value
  }
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(double x) {
  std::string s = std::to_string(x);
  return s;
}
inline std::string to_string(const Rational& x) { return x.get_str(); }

template <RealField R>
struct Complex {
  R re;
  R im;

  Complex() : re(0), im(0) {}
  Complex(const R& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(const R& r, const R& i) : re(r), im(i) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return diskt::is_zero(re) && diskt::is_zero(im); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return Complex(R(-a.re), R(-a.im)); }

  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(R(a.re * b.re - a.im * b.im), R(a.re * b.im + a.im * b.re));
  }
  friend Complex operator*(const Complex& a, const R& s) { return Complex(R(a.re * s), R(a.im * s)); }
  friend Complex operator*(const R& s, const Complex& a) { return a * s; }
  friend Complex operator/(const Complex& a, const R& s) { return Complex(R(a.re / s), R(a.im / s)); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend Complex conj(const Complex& a) { return Complex(a.re, R(-a.im)); }
  /// |a|^2
  friend R norm(const Complex& a) { return R(a.re * a.re + a.im * a.im); }

  std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& a) {
    return os << '(' << a.re << ", " << a.im << ')';
  }
};

using ExactComplex = Complex<Rational>;

/// The imaginary unit in field R.
template <RealField R>
Complex<R> imag_unit() {
  return Complex<R>(R(0), R(1));
}

template <RealField R>
Complex<R> from_std(std::complex<double> z) {
  return Complex<R>(from_double<R>(z.real()), from_double<R>(z.imag()));
}

}  // namespace diskt
