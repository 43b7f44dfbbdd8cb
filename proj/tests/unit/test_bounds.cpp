#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bargmann/bounds.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/gaussian_core.hpp"
#include "bargmann/inversion.hpp"
#include "bargmann/transform.hpp"

using namespace bargmann;

namespace {

using C = std::vector<cplx>;

const TestFunction& decaying() {
  static const TestFunction f = TestFunction::gaussian_quadratic(-0.25, 1);
  return f;
}

}  // namespace

TEST(Envelope, Examples) {
  EXPECT_NEAR(holder_envelope(2.0, 1.0, C{0.0}), 1.0, 1e-15);
  EXPECT_NEAR(holder_envelope(2.0, std::exp(1.0), C{1.0}), 4.4816890703380645, 1e-14);
  EXPECT_NEAR(holder_envelope(3.0, 1.0, C{cplx(0.0, 1.0)}), std::exp(0.5), 1e-15);
  EXPECT_NEAR(log_holder_envelope(3.0, 2.0, C{cplx(2.0, 1.0)}), std::log(2.0) + 0.5 + 1.0, 1e-14);
}

TEST(Envelope, ExponentialIsTightAtOne) {
  const TestFunction f = TestFunction::exp_linear({1.0});
  const double norm = weighted_lp_norm(f, 2.0, GaussianWeight(WeightKind::rho, 1));
  const double lhs = std::abs(sb_transform_holo(f)(C{1.0}));
  EXPECT_NEAR(lhs, std::exp(1.5), 1e-12);
  EXPECT_NEAR(lhs / holder_envelope(2.0, norm, C{1.0}), 1.0, 1e-9);
}

TEST(HolderCheck, NoViolations) {
  const ComplexGrid grid{5.0, 5.0, 41};
  for (const TestFunction& f : {TestFunction::hermite({3}), TestFunction::exp_linear({1.0}),
                                TestFunction::hermite({0})}) {
    const CheckReport r = check_holder(f, 2.0, grid);
    EXPECT_EQ(r.violations(), 0) << f.name();
    EXPECT_TRUE(r.passed());
  }
}

TEST(HolderCheck, ConstantSitsBelowTheEnvelope) {
  const HoloFunction one = sb_transform_holo(TestFunction::hermite({0}));
  for (const auto& z : ComplexGrid{5.0, 5.0, 11}.points(1)) {
    EXPECT_NEAR(std::abs(one(z)), 1.0, 1e-15);
    EXPECT_LE(1.0, holder_envelope(1.5, 1.0, z) * (1.0 + 1e-15));
  }
}

TEST(HolderCheck, CorruptedEnvelopeIsCaught) {
  HolderOptions opts;
  opts.envelope_y_scale = 0.5;
  const CheckReport r = check_holder(TestFunction::exp_linear({cplx(0.0, 1.0)}), 2.0, ComplexGrid{5.0, 5.0, 21}, opts);
  EXPECT_GT(r.violations(), 0);
}

TEST(ShellDecay, WeightedModulusDecreases) {
  for (const TestFunction& f : {TestFunction::hermite({3}), TestFunction::exp_linear({1.0}), decaying()}) {
    for (double p : {1.5, 2.0, 3.0}) {
      const ShellMaxima s = shell_maxima(sb_transform_holo(f), p, {4.0, 5.0, 6.0});
      EXPECT_TRUE(s.strictly_decreasing) << f.name() << " p=" << p;
    }
  }
}

TEST(ImageNorm, L1OfConstant) {
  const HoloFunction one = HoloFunction::constant(1, 1.0);
  EXPECT_NEAR(image_norm(one, 2.0, ImageNormKind::L1), 2.0 * kPi, 1e-9);
  // integral e^{-y^2/2} e^{-x^2/2(p-1)} = 2 pi sqrt(p-1)
  EXPECT_NEAR(image_norm(one, 3.0, ImageNormKind::L1), 2.0 * kPi * std::sqrt(2.0), 1e-9);
}

TEST(ImageNorm, HyperOfConstantAndIdentity) {
  for (double p : {1.25, 2.0, 4.0}) {
    EXPECT_NEAR(image_norm(HoloFunction::constant(1, 1.0), p, ImageNormKind::Hyper), 1.0, 1e-12);
    // (integral |sqrt(p-1) z|^2 e^{-|z|^2} / pi)^{1/2} = sqrt(p-1)
    EXPECT_NEAR(image_norm(HoloFunction::monomial(1, {1, 0, 0}), p, ImageNormKind::Hyper), std::sqrt(p - 1.0),
                1e-12);
  }
}

TEST(ImageNorm, LpPrimeOfConstant) {
  // (integral (e^{-y^2/2} e^{-x^2/2(p-1)})^{p'})^{1/p'} = (2 pi (p-1)^{1/2} / p')^{1/p'}
  for (double p : {1.5, 3.0}) {
    const double q = conjugate_exponent(p);
    const double expected = std::pow(2.0 * kPi * std::sqrt(p - 1.0) / q, 1.0 / q);
    EXPECT_NEAR(image_norm(HoloFunction::constant(1, 1.0), p, ImageNormKind::LpPrime), expected, 1e-7);
  }
}

TEST(ImageNorm, MixedOfConstant) {
  // (integral_x (sqrt(2 pi) e^{-x^2/2(p-1)})^p dx)^{1/p}
  const double p = 2.0;
  const double expected = std::sqrt(2.0 * kPi) * std::pow(std::sqrt(2.0 * kPi * (p - 1.0) / p), 1.0 / p);
  EXPECT_NEAR(image_norm(HoloFunction::constant(1, 1.0), p, ImageNormKind::Mixed), expected, 1e-7);
}

TEST(ImageNorm, GatesRejectFastGrowth) {
  const HoloFunction F = HoloFunction::exp_quadratic(1, 1.2);
  EXPECT_THROW(image_norm(F, 2.0, ImageNormKind::L1), DivergenceError);
  EXPECT_THROW(image_norm(F, 2.0, ImageNormKind::Hyper), DivergenceError);
}

TEST(ImageNorm, ConjugateExponent) {
  for (double p : {1.25, 1.5, 2.0, 3.0, 5.0}) {
    EXPECT_NEAR(1.0 / p + 1.0 / conjugate_exponent(p), 1.0, 1e-15);
  }
}

TEST(FiniteProbe, TransformsHaveFiniteNorms) {
  for (const TestFunction& f : {TestFunction::hermite({2}), TestFunction::exp_linear({1.0}), decaying()}) {
    for (double p : {1.25, 1.5, 2.0}) {
      const FiniteNormProbe probe = probe_finite_norm(sb_transform_holo(f), p, ImageNormKind::LpPrime);
      EXPECT_TRUE(probe.finite) << f.name() << " p=" << p << " change " << probe.change;
    }
  }
}

TEST(FiniteProbe, GateChainForDecayingFunction) {
  const HoloFunction F = sb_transform_holo(decaying());
  for (double p : {1.5, 2.0, 3.0}) {
    const bool l1 = std::isfinite(image_norm(F, p, ImageNormKind::L1));
    const bool lp = probe_finite_norm(F, p, ImageNormKind::LpPrime).finite;
    const bool decay = shell_maxima(F, p, {4.0, 5.0, 6.0}).strictly_decreasing;
    EXPECT_TRUE(!l1 || lp);
    EXPECT_TRUE(!lp || decay);
  }
}

TEST(Sandwich, NecessityAndSufficiency) {
  // every S f meets the envelope; for p >= 2 a finite LpPrime norm lets F round-trip
  const ComplexGrid grid{5.0, 5.0, 21};
  const QuadratureRule rule = default_transform_rule(1, 48);
  for (const TestFunction& f : {TestFunction::hermite({2}), TestFunction::exp_linear({0.5}), decaying()}) {
    const HoloFunction F = sb_transform_holo(f);
    for (double p : {2.0, 3.0}) {
      EXPECT_EQ(check_holder(f, p, grid).violations(), 0) << f.name();
      ASSERT_TRUE(probe_finite_norm(F, p, ImageNormKind::LpPrime).finite) << f.name() << " p=" << p;
      const InversionConfig cfg = InversionConfig::nested(p);
      const TestFunction g = TestFunction::custom(
          1, [F, cfg](RealPoint x) { return adjoint_inverse(F, cfg, x); }, inverse_growth(F.envelope(), 1),
          "inverse");
      for (cplx z : {cplx(0.3, -0.4), cplx(-1.0, 0.5), cplx(1.2, 1.0)}) {
        const C pt{z};
        EXPECT_LT(std::abs(sb_transform(g, pt, rule) - F(pt)), 1e-5 * (1.0 + std::abs(F(pt))))
            << f.name() << " p=" << p << " z=" << z;
      }
    }
  }
}

TEST(Hyper, ConstantIsEquality) {
  const CheckReport r = hyper_check(TestFunction::hermite({0}), 1.5);
  ASSERT_EQ(r.cases().size(), 1u);
  EXPECT_NEAR(*r.cases()[0].lhs, 1.0, 1e-12);
  EXPECT_NEAR(*r.cases()[0].rhs, 1.0, 1e-12);
  EXPECT_TRUE(r.passed());
}

TEST(Hyper, FirstHermiteAtTwoIsEquality) {
  const CheckReport r = hyper_check(TestFunction::hermite({1}), 2.0);
  EXPECT_NEAR(*r.cases()[0].lhs, *r.cases()[0].rhs, 1e-7);
  EXPECT_TRUE(r.passed());
}

TEST(Hyper, ExponentialIsAnEqualityCase) {
  // |S e^{x}(sqrt(p-1) z)|^2 averaged over mu gives e^{p}; ||e^{x}||_{L^p(rho)} = e^{p/2}.
  // Exponentials are extremal, so both sides coincide for every p.
  for (double p : {1.25, 1.5}) {
    const CheckReport r = hyper_check(TestFunction::exp_linear({1.0}), p);
    EXPECT_NEAR(*r.cases()[0].lhs, std::exp(p / 2.0), 1e-9);
    EXPECT_NEAR(*r.cases()[0].rhs, std::exp(p / 2.0), 1e-7);
    EXPECT_TRUE(r.passed());
  }
}

TEST(Hyper, StrictForHigherHermite) {
  // ||S He_2||_Hyper = (p-1) sqrt 2 < ||He_2||_{L^p(rho)} for p < 2
  const CheckReport r = hyper_check(TestFunction::hermite({2}), 1.5);
  EXPECT_NEAR(*r.cases()[0].lhs, 0.5 * std::sqrt(2.0), 1e-12);
  EXPECT_LT(*r.cases()[0].lhs, *r.cases()[0].rhs);
}

TEST(Hyper, ReverseConstant) {
  const auto r = hyper_reconstruct(HoloFunction::constant(1, 1.0), 3.0, InversionConfig::nested(3.0));
  EXPECT_NEAR(r.f_norm, 1.0, 1e-8);
  EXPECT_NEAR(r.bound, 1.0, 1e-12);
  const std::vector<double> x{0.7};
  EXPECT_NEAR(std::abs(r.f(x) - 1.0), 0.0, 1e-8);
}

TEST(Hyper, ReverseSquareIsEquality) {
  const auto r = hyper_reconstruct(HoloFunction::monomial(1, {2, 0, 0}), 2.0, InversionConfig::nested(2.0));
  EXPECT_NEAR(r.bound, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(r.f_norm, std::sqrt(2.0), 1e-7);
  EXPECT_TRUE(r.report.passed());
}

TEST(Hyper, ReverseIdentityAtFour) {
  const auto r = hyper_reconstruct(HoloFunction::monomial(1, {1, 0, 0}), 4.0, InversionConfig::nested(4.0));
  EXPECT_NEAR(r.bound, std::sqrt(3.0), 1e-12);
  // ||He_1||_{L^4(rho)} = (E x^4)^{1/4} = 3^{1/4}
  EXPECT_NEAR(r.f_norm, std::pow(3.0, 0.25), 1e-6);
  EXPECT_LE(r.f_norm, r.bound);
}

TEST(Schwartz, DecayingTransformStabilizes) {
  const SchwartzConstants c = schwartz_constants(sb_transform_holo(decaying()), 2.0, 6);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(c.trend[n], SchwartzTrend::stable) << n << " ratio " << c.ratio[n];
  }
}

TEST(Schwartz, PolynomialFactorsKeepStability) {
  // z^k S f = S((x - D)^k f)
  const HoloFunction base = sb_transform_holo(decaying());
  TestFunction g = decaying();
  for (int k = 1; k <= 3; ++k) {
    g = creation_apply(g, 0);
    const HoloFunction F = sb_transform_holo(g);
    for (cplx z : {cplx(0.5, -1.0), cplx(2.0, 1.5)}) {
      const C p{z};
      EXPECT_LT(std::abs(F(p) - std::pow(z, k) * base(p)), 1e-12 * (1.0 + std::abs(F(p))));
    }
    const SchwartzConstants c = schwartz_constants(F, 2.0, 6);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(c.trend[n], SchwartzTrend::stable) << k << " " << n;
  }
}

TEST(Schwartz, FastGrowthNeverStabilizes) {
  const SchwartzConstants c = schwartz_constants(HoloFunction::exp_quadratic(1, 1.0), 2.0, 2);
  for (int n = 1; n <= 2; ++n) EXPECT_NE(c.trend[n], SchwartzTrend::stable) << n;
  EXPECT_EQ(c.trend[2], SchwartzTrend::divergent);
}

TEST(Schwartz, ConstantTransformIsStable) {
  // F = 1 comes from f = 1, which lies in the space; its constants stabilize.
  const SchwartzConstants c = schwartz_constants(HoloFunction::constant(1, 1.0), 2.0, 1);
  EXPECT_EQ(c.trend[1], SchwartzTrend::stable);
  EXPECT_LT(c.ratio[1], 2.0);
}

TEST(Creation, LaddersHermitePolynomials) {
  const TestFunction x = creation_apply(TestFunction::hermite({0}), 0);
  for (int n = 0; n <= 5; ++n) {
    const TestFunction up = creation_apply(TestFunction::hermite({n}), 0);
    for (double t : {-2.0, 0.3, 1.9}) {
      const std::vector<double> p{t};
      EXPECT_NEAR(std::abs(up(p) - hermite(n + 1, t)), 0.0, 1e-10);
      EXPECT_NEAR(std::abs(x(p) - t), 0.0, 1e-15);
    }
  }
}

TEST(Creation, IntertwinesWithMultiplication) {
  for (const TestFunction& f : {TestFunction::hermite({0}), TestFunction::hermite({2}),
                                TestFunction::exp_linear({0.5}), decaying()}) {
    const HoloFunction lhs = sb_transform_holo(creation_apply(f, 0));
    const HoloFunction rhs = sb_transform_holo(f);
    for (const auto& z : ComplexGrid{1.4, 1.4, 9}.points(1)) {
      EXPECT_LT(std::abs(lhs(z) - z[0] * rhs(z)), 1e-12 * (1.0 + std::abs(lhs(z))));
    }
  }
}

TEST(Creation, NumericalDerivativeForCustomFunctions) {
  const TestFunction f = TestFunction::custom(
      1, [](RealPoint x) { return cplx(std::sin(x[0])); }, GrowthClass{0.0, {0.0}, 0}, "sin");
  const TestFunction g = creation_apply(f, 0);
  for (double t : {-1.0, 0.5}) {
    const std::vector<double> p{t};
    EXPECT_NEAR(g(p).real(), t * std::sin(t) - std::cos(t), 1e-9);
  }
}

TEST(Membership, DecayingGaussianPassesAllSixteen) {
  const CheckReport r = schwartz_membership_suite(decaying(), 2.0, 3);
  EXPECT_EQ(r.cases().size(), 16u);
  EXPECT_TRUE(r.passed());
}

TEST(Membership, PolynomialPasses) {
  EXPECT_TRUE(schwartz_membership_suite(TestFunction::hermite({3}), 2.0, 3).passed());
}

TEST(Membership, GrowthJustBelowTheGate) {
  EXPECT_TRUE(schwartz_membership_suite(TestFunction::gaussian_quadratic(0.24, 1), 2.0, 3).passed());
  EXPECT_FALSE(schwartz_membership_suite(TestFunction::gaussian_quadratic(0.25, 1), 2.0, 1).passed());
}
