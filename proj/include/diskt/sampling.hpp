#pragma once

#include <cstdint>
#include <random>

#include "diskalg.hpp"
#include "scalar.hpp"

namespace diskt {

/// Deterministic generator of random test inputs with small rational coefficients.
class PolynomialSampler {
 public:
  explicit PolynomialSampler(std::uint64_t seed) : rng_(seed) {}

  /// Random coefficient p/q + i r/s with |p|, |r| <= 9 and 1 <= q, s <= 9.
  ExactComplex coefficient() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    Rational re(num(rng_), den(rng_)), im(num(rng_), den(rng_));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
  }

  /// A polynomial with total degree <= max_degree; each monomial is present with probability density.
  ExactPolynomial polynomial(int max_degree, double density = 0.3) {
    std::bernoulli_distribution keep(density);
    ExactPolynomial p;
    for (int m = 0; m <= max_degree; ++m)
      for (int n = 0; m + n <= max_degree; ++n)
        if (keep(rng_)) p.add({m, n}, coefficient());
    if (p.is_zero()) p.add({uniform(0, max_degree), 0}, ExactComplex(1));
    return p;
  }

  /// A component of rotation degree d with up to `terms` radial coefficients b_n.
  AngularComponent<Rational> component(int d, int terms) {
    AngularComponent<Rational> g;
    g.d = d;
    const int n0 = g.min_index();
    for (int j = 0; j < terms; ++j) {
      ExactComplex c = coefficient();
      if (!c.is_zero()) g.b[n0 + j] = c;
    }
    if (g.b.empty()) g.b[n0] = ExactComplex(1);
    return g;
  }

  /// Uniform point in the open disk of radius r_max.
  std::complex<double> point(double r_max = 0.9) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = r_max * std::sqrt(u(rng_));
    double t = 2.0 * 3.141592653589793 * u(rng_);
    return std::polar(r, t);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace diskt
