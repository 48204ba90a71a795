#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "diskt/diskalg.hpp"
#include "diskt/polynomial_io.hpp"
#include "diskt/sampling.hpp"
#include "diskt/transforms.hpp"

using namespace diskt;

namespace {

ExactPolynomial P(const char* s) { return parse_polynomial(s); }

AngularComponent<Rational> comp(int d, std::initializer_list<std::pair<int, ExactComplex>> b) {
  AngularComponent<Rational> g;
  g.d = d;
  for (const auto& [n, c] : b) g.b[n] = c;
  return g;
}

}  // namespace

TEST(Cauchy, Monomials) {
  EXPECT_EQ(cauchy_integral(P("1")), P("-conj(w)"));
  EXPECT_EQ(cauchy_integral(P("w")), P("1 - w*conj(w)"));
  EXPECT_EQ(cauchy_integral(P("conj(w)")), P("-conj(w)^2/2"));
}

TEST(J0, ConjugatedComponents) {
  EXPECT_EQ(j0_op_conj(comp(0, {{0, ExactComplex(1)}})), P("w"));
  EXPECT_TRUE(j0_op_conj(comp(1, {{0, ExactComplex(1)}, {2, ExactComplex(5)}})).is_zero());
  EXPECT_EQ(j0_op_conj(comp(-1, {{1, ExactComplex(1)}})), P("w^2/2"));
}

TEST(J0Star, Monomials) {
  EXPECT_TRUE(j0_star(P("1")).is_zero());
  EXPECT_EQ(j0_star(P("w")), P("1/2"));
  EXPECT_EQ(j0_star(P("w^2*conj(w)")), P("1/3"));
  EXPECT_EQ(j0_star(P("w^3")), P("w^2/4"));
}

TEST(CauchyP, Monomials) {
  EXPECT_EQ(cauchy_P(P("1")), P("conj(w) - w"));
  EXPECT_EQ(cauchy_P(P("w")), P("w*conj(w) - 1"));
  EXPECT_EQ(cauchy_P(P("conj(w)")), P("(conj(w)^2 - w^2)/2"));
  // Real-linear, not complex-linear.
  EXPECT_EQ(cauchy_P(P("i")), P("i*conj(w) + i*w"));
}

TEST(CauchyP, RadialRepresentation) {
  EXPECT_EQ(radial_P_gd(comp(1, {{0, ExactComplex(1)}})), P("w*conj(w) - 1"));
  EXPECT_EQ(radial_P_gd(comp(0, {{0, ExactComplex(1)}})), P("conj(w) - w"));
  EXPECT_EQ(radial_P_gd(comp(2, {{0, ExactComplex(1)}})), P("w^2*conj(w) - w"));
  PolynomialSampler s(21);
  for (int d = -5; d <= 6; ++d)
    for (int i = 0; i < 10; ++i) {
      const auto g = s.component(d, 5);
      EXPECT_EQ(radial_P_gd(g), cauchy_P(g.to_polynomial())) << "d=" << d;
    }
}

TEST(CauchyP, SolvesDbarEquation) {
  PolynomialSampler s(22);
  for (int i = 0; i < 200; ++i) {
    const ExactPolynomial phi = s.polynomial(8);
    EXPECT_EQ(d_dzbar(cauchy_P(phi)), phi);
  }
}

// Re P[phi] vanishes on the unit circle; outputs are polynomials, so evaluate at roots of unity.
TEST(CauchyP, RealPartVanishesOnCircle) {
  PolynomialSampler s(23);
  for (int i = 0; i < 30; ++i) {
    const ExactPolynomial out = cauchy_P(s.polynomial(6));
    for (int k = 0; k < 64; ++k) {
      const auto z = std::polar(1.0, 2 * std::numbers::pi * k / 64);
      EXPECT_NEAR(evaluate(out, z).real(), 0.0, 1e-12);
    }
  }
}

TEST(BeurlingS, Monomials) {
  EXPECT_TRUE(beurling_S(P("1")).is_zero());
  EXPECT_EQ(beurling_S(P("w^2")), P("2*w*conj(w) - 1"));
  EXPECT_TRUE(beurling_S(P("conj(w)")).is_zero());
}

TEST(BeurlingS, Contraction) {
  PolynomialSampler s(24);
  for (int i = 0; i < 200; ++i) {
    const ExactPolynomial phi = s.polynomial(8);
    EXPECT_LE(norm_sq(beurling_S(phi)), norm_sq(phi));
  }
  // Equality for analytic phi with phi(0) = 0.
  for (int i = 0; i < 50; ++i) {
    ExactPolynomial phi;
    for (int m = 1; m <= 6; ++m) phi.add({m, 0}, s.coefficient());
    EXPECT_EQ(norm_sq(beurling_S(phi)), norm_sq(phi));
  }
}

TEST(Bergman, ProjectionProperties) {
  EXPECT_EQ(bergman_B(P("1")), P("1"));
  EXPECT_EQ(bergman_B(P("w")), P("w"));
  EXPECT_TRUE(bergman_B(P("conj(w)")).is_zero());
  EXPECT_EQ(bergman_B(P("w^2*conj(w)")), P("2*w/3"));
  PolynomialSampler s(25);
  for (int i = 0; i < 100; ++i) {
    const ExactPolynomial phi = s.polynomial(8);
    const ExactPolynomial b = bergman_B(phi);
    EXPECT_EQ(bergman_B(b), b);
    // phi - B phi is orthogonal to analytic polynomials.
    for (int m = 0; m <= 8; ++m) EXPECT_TRUE(inner_product(phi - b, ExactPolynomial::monomial(m, 0)).is_zero());
  }
}

TEST(BeurlingH, Monomials) {
  EXPECT_EQ(beurling_H(P("1")), P("-1"));
  EXPECT_EQ(beurling_H(P("w*conj(w)")), P("(conj(w)^2 - 1)/2"));
  EXPECT_EQ(beurling_H(P("w^2")), P("2*w*conj(w) - 1"));
}

TEST(BeurlingH, SplitAndDerivative) {
  PolynomialSampler s(26);
  for (int i = 0; i < 200; ++i) {
    const ExactPolynomial phi = s.polynomial(9);
    EXPECT_EQ(beurling_H(phi), beurling_H_split(phi));
    EXPECT_EQ(beurling_H(phi), d_dz(cauchy_P(phi)));
    EXPECT_EQ(norm_sq(beurling_H(phi)), norm_sq(phi));
  }
}

TEST(HengartnerSchober, Constant) {
  EXPECT_TRUE(t_hs(ExactPolynomial()).is_zero());
  // The w term contributes (a - conj(a)) / 2: zero for real a.
  EXPECT_TRUE(t_hs_constant(P("w")).is_zero());
  EXPECT_EQ(t_hs(P("w")), cauchy_P(P("w")));
  EXPECT_EQ(t_hs_constant(P("i*w")), ExactComplex(Rational(0), Rational(1)));
  EXPECT_EQ(t_hs_constant(P("3i*w^2*conj(w)")), ExactComplex(Rational(0), Rational(3, 2)));
  EXPECT_TRUE(t_hs_constant(P("5*w^3 + i*conj(w)")).is_zero());
}

TEST(HengartnerSchober, ImaginaryPartAtOriginVanishes) {
  PolynomialSampler s(27);
  for (int i = 0; i < 100; ++i) {
    const ExactPolynomial src = s.polynomial(7);
    ExactPolynomial phi;
    for (const auto& [k, a] : src.terms()) phi.add(k, ExactComplex(a.re));
    EXPECT_EQ(t_hs(phi).coeff({0, 0}).im, Rational(0));
  }
}

TEST(HengartnerSchober, RealPartVanishesOnCircle) {
  PolynomialSampler s(28);
  for (int i = 0; i < 30; ++i) {
    const ExactPolynomial out = t_hs(s.polynomial(6));
    for (int k = 0; k < 64; ++k)
      EXPECT_NEAR(evaluate(out, std::polar(1.0, 2 * std::numbers::pi * k / 64)).real(), 0.0, 1e-12);
  }
}

TEST(Apply, NamesRoundTrip) {
  for (auto k : kAllTransforms) EXPECT_EQ(parse_transform(name(k)), k);
  EXPECT_THROW(parse_transform("Q"), DomainError);
  EXPECT_TRUE(conjugates_input(TransformKind::CauchyTransformP));
  EXPECT_FALSE(conjugates_input(TransformKind::BergmanB));
}

TEST(Apply, FloatAndExactAgree) {
  PolynomialSampler s(29);
  for (int i = 0; i < 20; ++i) {
    const ExactPolynomial phi = s.polynomial(6);
    for (auto k : kAllTransforms) {
      const FloatPolynomial f = apply(k, to_float(phi));
      const FloatPolynomial e = to_float(apply(k, phi));
      for (const auto& [m, a] : f.terms()) EXPECT_LT(std::abs(e.coeff(m).to_std() - a.to_std()), 1e-13);
      for (const auto& [m, a] : e.terms()) EXPECT_LT(std::abs(f.coeff(m).to_std() - a.to_std()), 1e-13);
    }
  }
}
