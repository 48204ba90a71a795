#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "diskt/extremal.hpp"

using namespace diskt;
using boost::math::tgamma;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss summation applied to both hypergeometric terms of Phi at t = 1.
double phi_at_one(double q) {
  const double h = q / 2;
  return 2 / (2 - q) * tgamma(2 - q) / (tgamma(1 - h) * tgamma(2 - h)) + tgamma(2 - q) / std::pow(tgamma(2 - h), 2);
}

}  // namespace

TEST(Phi, Examples) {
  EXPECT_NEAR(phi_fn(1.0, 0.0), 2.0, 1e-15);
  EXPECT_NEAR(phi_fn(1.0, 1.0), 8 / std::numbers::pi, 1e-12);
  EXPECT_NEAR(phi_fn(1.5, 1.0), phi_at_one(1.5), 1e-8);
  EXPECT_THROW(phi_fn(2.0, 0.5), DomainError);
  EXPECT_THROW(phi_fn(1.5, 1.1), DomainError);
}

TEST(Phi, EndpointMatchesGaussSum) {
  for (double q : {1.0, 1.25, 4.0 / 3, 1.8}) EXPECT_NEAR(phi_fn(q, 1.0), phi_at_one(q), 1e-8) << q;
}

TEST(NormPToInf, ClosedForm) {
  EXPECT_NEAR(norm_p_to_inf(kInf), 8 / std::numbers::pi, 1e-14);
  EXPECT_NEAR(norm_p_to_inf(4.0), 2.975158603064758, 1e-12);
  EXPECT_THROW(norm_p_to_inf(2.0), DomainError);
  EXPECT_THROW(norm_p_to_inf(std::nan("")), DomainError);
  for (double p : {2.01, 2.5, 3.0, 6.0, 50.0, 1e6}) {
    const double v = norm_p_to_inf(p);
    EXPECT_TRUE(std::isfinite(v) && v > 0) << p;
  }
}

TEST(NormPToInf, ExponentPair) {
  const auto e = ExponentPair::from_p(4.0);
  EXPECT_DOUBLE_EQ(e.q, 4.0 / 3);
  EXPECT_FALSE(e.infinite());
  EXPECT_EQ(ExponentPair::from_p(kInf).q, 1.0);
  EXPECT_THROW(ExponentPair::from_p(1.5), DomainError);
}

TEST(Monotonicity, Scan) {
  EXPECT_TRUE(monotonicity_scan(1.0, 200));
  EXPECT_TRUE(monotonicity_scan(1.9, 200));
  EXPECT_TRUE(monotonicity_scan(1.5, 2));
  EXPECT_THROW(monotonicity_scan(1.5, 1), DomainError);
}

TEST(ExtremalRatio, InfiniteExponentApproachesNorm) {
  const double r = extremal_ratio_pinf(kInf, 0.999);
  EXPECT_NEAR(r / norm_p_to_inf(kInf), 1.0, 0.02);
  EXPECT_LT(r, norm_p_to_inf(kInf) + 1e-6);
}

TEST(ExtremalRatio, FiniteExponent) {
  const double n = norm_p_to_inf(4.0);
  EXPECT_LT(extremal_ratio_pinf(4.0, 0.0), n);
  const double a = extremal_ratio_pinf(4.0, 0.9), b = extremal_ratio_pinf(4.0, 0.99), c = extremal_ratio_pinf(4.0, 0.999);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_LT(c, n);
  // Frozen; reproduced with quadrature centered at 1 instead of z. Convergence is slow in 1 - z.
  EXPECT_NEAR(b, 2.85317694, 1e-6);
  EXPECT_NEAR(c, 2.94887845, 1e-6);
}

TEST(RieszThorin, Endpoints) {
  const double alpha = solve_alpha();
  EXPECT_NEAR(riesz_thorin_bound(2.0, alpha), alpha, 1e-15);
  EXPECT_NEAR(riesz_thorin_bound(kInf, alpha), 8 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(riesz_thorin_bound(4.0), std::sqrt(alpha * 8 / std::numbers::pi), 1e-14);
  EXPECT_NEAR(riesz_thorin_bound(4.0), 1.66316939498067, 1e-12);
  EXPECT_THROW(riesz_thorin_bound(1.5), DomainError);
}

TEST(L1, EllipticFormValue) {
  const auto r = l1_at_zero();
  EXPECT_NEAR(r.value, 2.10441, 5e-4);
  EXPECT_NEAR(r.value, 2.10440831319853, 1e-9);
  EXPECT_GT(r.value, 4.0 / 3);
  EXPECT_GT(r.evaluations, 0);
}

TEST(L1, DirectQuadratureAgrees) {
  EXPECT_NEAR(l1_direct_2d().value, l1_at_zero().value, 1e-4);
}

// (1-r^2) E(-4r^2/(1-r^2)^2) = (1+r^2) E(4r^2/(1+r^2)^2): both terms coincide.
TEST(L1, ImaginaryModulusIdentity) {
  for (double r : {0.05, 0.3, 0.5, 0.8, 0.95, 0.999}) {
    const double a = 1 - r * r, b = 1 + r * r;
    EXPECT_NEAR(a * elliptic_e(-4 * r * r / (a * a)), b * elliptic_e(4 * r * r / (b * b)), 1e-12) << r;
  }
}

TEST(L1, ScanAndSymmetry) {
  const auto scan = l1_integrand_scan(radial_grid(3));
  ASSERT_EQ(scan.rows.size(), 3u);
  EXPECT_NEAR(scan.rows[0].value, l1_at_zero().value, 1e-5);
  EXPECT_LT(scan.argmax, 3u);
  const cplx w(0.3, 0.4);
  EXPECT_NEAR(l1_integrand(w).value, l1_integrand(std::conj(w)).value, 1e-6);
  EXPECT_THROW(l1_integrand(1.0), DomainError);
  EXPECT_THROW(radial_grid(6), DomainError);
}

TEST(Counterexample, FiniteNormDivergentIntegral) {
  const auto rep = counterexample_p2();
  EXPECT_NEAR(rep.norm_sq, 2 / std::numbers::ln2, 1e-10);
  EXPECT_NEAR(rep.norm_sq_expected, 2.88539008178, 1e-10);
  EXPECT_NEAR(rep.truncated_quadrature, rep.truncated_antiderivative, 1e-10);
  ASSERT_EQ(rep.annuli.size(), 8u);
  for (const auto& a : rep.annuli) EXPECT_NEAR(a.value, a.closed_form, 1e-10) << a.eps;
  EXPECT_TRUE(rep.strictly_increasing);
  // Growth is like 2 log log(1/eps): unbounded, but slowly.
  EXPECT_GT(rep.annuli.back().value, 2 * rep.annuli.front().value);
}
