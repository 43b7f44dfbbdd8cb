#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bargmann/bounds.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/gaussian_core.hpp"
#include "bargmann/transform.hpp"

using namespace bargmann;

namespace {

using C = std::vector<cplx>;

// Transform of a function without closed form: only quadrature can evaluate it.
TestFunction opaque(const TestFunction& f) {
  return TestFunction::custom(
      f.dim(), [f](RealPoint x) { return f(x); }, f.growth(), "opaque " + f.name());
}

std::vector<C> random_points(int d, int count, double radius, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<C> out;
  while (static_cast<int>(out.size()) < count) {
    C z(d);
    for (auto& v : z) v = cplx(u(gen), u(gen));
    if (std::sqrt(modulus_square(z)) <= 1.0) {
      for (auto& v : z) v *= radius;
      out.push_back(z);
    }
  }
  return out;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(Transform, ConstantMapsToOne) {
  const TestFunction one = opaque(TestFunction::hermite({0}));
  const QuadratureRule rule = default_transform_rule(1);
  for (const C& z : {C{0.0}, C{{1.5, -2.0}}, C{{-3.0, 0.5}}}) {
    EXPECT_LT(std::abs(sb_transform(one, z, rule) - 1.0), 1e-12);
  }
}

TEST(Transform, ExponentialCompletesTheSquare) {
  const TestFunction f = opaque(TestFunction::exp_linear({1.0}));
  const QuadratureRule rule = default_transform_rule(1);
  EXPECT_NEAR(std::abs(sb_transform(f, C{0.0}, rule) - 1.6487212707001282), 0.0, 1e-8 * 1.6487212707);
  for (const C& z : random_points(1, 5, 2.0, 3)) {
    EXPECT_LT(rel(sb_transform(f, z, rule), std::exp(z[0] + 0.5)), 1e-8);
  }
}

TEST(Transform, HermiteMapsToMonomial) {
  const QuadratureRule rule = default_transform_rule(1);
  for (int n = 0; n <= 6; ++n) {
    const TestFunction f = opaque(TestFunction::hermite({n}));
    for (cplx z : {cplx(1.0), cplx(0.0, 1.0), cplx(1.0, 1.0)}) {
      EXPECT_LT(rel(sb_transform(f, C{z}, rule), std::pow(z, n)), 1e-7) << "n=" << n << " z=" << z;
    }
  }
}

TEST(Transform, HermiteProductInTwoDimensions) {
  const TestFunction f = opaque(TestFunction::hermite({2, 1}));
  const QuadratureRule rule = default_transform_rule(2, 24);
  const C z{{0.5, 1.0}, {-1.0, 0.25}};
  EXPECT_LT(rel(sb_transform(f, z, rule), z[0] * z[0] * z[1]), 1e-10);
}

TEST(Transform, HoloProvenance) {
  const HoloFunction F = sb_transform_holo(TestFunction::hermite({2}));
  EXPECT_EQ(F.provenance(), HoloProvenance::closed_form);
  const cplx z(0.3, -1.2);
  EXPECT_LT(rel(F(C{z}), z * z), 1e-14);
  const HoloFunction G = sb_transform_holo(opaque(TestFunction::hermite({2})));
  EXPECT_EQ(G.provenance(), HoloProvenance::quadrature_backed);
}

TEST(Transform, ClosedFormsAgreeWithQuadrature) {
  std::vector<TestFunction> family = {
      TestFunction::hermite({3}), TestFunction::exp_linear({cplx(0.5, -0.3)}),
      TestFunction::gaussian_quadratic(-0.25, 1), TestFunction::gaussian_quadratic(0.2, 1),
      TestFunction::hermite({1, 2}), TestFunction::exp_linear({1.0, -0.5})};
  for (const TestFunction& f : family) {
    const QuadratureRule rule = default_transform_rule(f.dim(), f.dim() == 1 ? 64 : 32);
    for (const C& z : random_points(f.dim(), 5, 2.0, 11)) {
      const cplx exact = *f.transform_closed_form(z);
      EXPECT_LT(rel(sb_transform(f, z, rule), exact), 1e-6) << f.name();
    }
  }
}

TEST(Transform, GaussianClosedFormOracle) {
  // S e^{a x^2}(z) = (1-2a)^{-1/2} exp(z^2 a / (1-2a))
  const double a = -0.25;
  const HoloFunction F = sb_transform_holo(TestFunction::gaussian_quadratic(a, 1));
  for (const C& z : random_points(1, 5, 2.0, 5)) {
    const cplx expected = std::pow(1.0 - 2.0 * a, -0.5) * std::exp(z[0] * z[0] * a / (1.0 - 2.0 * a));
    EXPECT_LT(rel(F(z), expected), 1e-13);
  }
}

TEST(Transform, Holomorphy) {
  for (const TestFunction& f : {TestFunction::hermite({4}), TestFunction::exp_linear({0.5}),
                                TestFunction::gaussian_quadratic(-0.25, 1)}) {
    EXPECT_LT(cauchy_riemann_residual(sb_transform_holo(f), random_points(1, 5, 2.0, 9)), 1e-4);
    EXPECT_LT(cauchy_riemann_residual(sb_transform_holo(opaque(f)), random_points(1, 5, 2.0, 9)), 1e-4);
  }
}

TEST(Transform, Linearity) {
  const TestFunction f = opaque(TestFunction::hermite({3}));
  const TestFunction g = opaque(TestFunction::exp_linear({0.5}));
  const cplx a(2.0, -1.0), b(-0.5, 0.25);
  const TestFunction h = TestFunction::combine(a, f, b, g);
  const QuadratureRule rule = default_transform_rule(1);
  for (const C& z : random_points(1, 8, 2.0, 13)) {
    const cplx lhs = sb_transform(h, z, rule);
    const cplx rhs = a * sb_transform(f, z, rule) + b * sb_transform(g, z, rule);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Transform, InjectivityProxy) {
  const GaussianWeight rho(WeightKind::rho, 1);
  const ComplexGrid grid{3.0, 3.0, 13};
  for (const TestFunction& f : {TestFunction::hermite({0}), TestFunction::hermite({5}),
                                TestFunction::exp_linear({-1.0}), TestFunction::gaussian_quadratic(-0.25, 1)}) {
    const double norm = weighted_lp_norm(f, 2.0, rho);
    const HoloFunction F = sb_transform_holo(f);
    double best = 0.0;
    for (const auto& z : grid.points(1)) best = std::max(best, std::abs(F(z)) / norm);
    EXPECT_GE(best, 1e-3) << f.name();
  }
}

TEST(Transform, GrowthGate) {
  const QuadratureRule rule = default_transform_rule(1);
  EXPECT_THROW(sb_transform(TestFunction::gaussian_quadratic(0.5, 1), C{0.0}, rule), DivergenceError);
  EXPECT_THROW(sb_transform_holo(TestFunction::gaussian_quadratic(0.6, 1)), DivergenceError);
}

TEST(Isometry, HermiteCombinationsKeepTheirNorm) {
  std::mt19937_64 gen(20240611);
  std::normal_distribution<double> n01;
  const GaussianWeight mu(WeightKind::mu, 1);
  for (int trial = 0; trial < 5; ++trial) {
    Polynomial p(1);
    double expected = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const double c = n01(gen);
      p += c * Polynomial::hermite_product(std::vector<int>{n});
      expected += c * c * std::tgamma(n + 1.0);
    }
    const double image = holo_l2_norm(sb_transform_holo(TestFunction::polynomial(p)), mu);
    EXPECT_NEAR(image * image, expected, 1e-8 * expected);
  }
}

TEST(Unitarity, ExponentialInWeightedSpaces) {
  // ||e^{x/2}||_{L^2(rho_{p/2})}^2 = e^{p/4}
  const TestFunction f = TestFunction::exp_linear({0.5});
  for (double p : {1.5, 2.0, 3.0}) {
    const double lhs = weighted_lp_norm(f, 2.0, GaussianWeight(WeightKind::rho_s, 1, p));
    const double rhs = holo_l2_norm(sb_transform_holo(f), GaussianWeight(WeightKind::mu_s, 1, p));
    EXPECT_NEAR(lhs, std::exp(p / 8.0), 1e-10);
    EXPECT_NEAR(rhs, std::exp(p / 8.0), 1e-8);
  }
}

TEST(LebesgueTransform, ZeroAndClosedForm) {
  const QuadratureRule rule = default_transform_rule(1);
  EXPECT_EQ(sp_transform(TestFunction::zero(1), 2.0, C{cplx(0.5, 0.5)}, rule), cplx(0.0));
  const TestFunction f = TestFunction::gaussian_quadratic(-0.5, 1);
  for (double p : {1.5, 3.0}) {
    for (const C& z : random_points(1, 4, 2.0, 21)) {
      EXPECT_LT(rel(sp_transform(f, p, z, rule), sp_transform_closed(f, p, z)), 1e-8);
    }
  }
}

TEST(Dilation, IdentityAndMonomials) {
  const HoloFunction F = HoloFunction::monomial(1, {3, 0, 0});
  const HoloFunction same = dilate(F, 0.0);
  const HoloFunction half = dilate(F, 0.5);
  for (const C& z : random_points(1, 5, 2.0, 17)) {
    EXPECT_EQ(same(z), F(z));
    EXPECT_LT(rel(half(z), std::exp(-1.5) * std::pow(z[0], 3)), 1e-14);
  }
}

TEST(Semigroup, HermiteEigenfunctions) {
  for (int n = 0; n <= 4; ++n) {
    const TestFunction g = ou_semigroup(TestFunction::hermite({n}), 0.5);
    for (double x = -3.0; x <= 3.0; x += 0.5) {
      const std::vector<double> p{x};
      const double expected = std::exp(-0.5 * n) * hermite(n, x);
      EXPECT_NEAR(std::abs(g(p) - expected), 0.0, 1e-6 * std::max(1.0, std::abs(expected))) << n;
    }
  }
  const TestFunction one = ou_semigroup(TestFunction::hermite({0}), 2.0);
  const std::vector<double> x{1.3};
  EXPECT_NEAR(std::abs(one(x) - 1.0), 0.0, 1e-10);
}

TEST(Semigroup, DilationCovariance) {
  const TestFunction f = TestFunction::exp_linear({0.5});
  const double t = 0.3;
  const TestFunction g = ou_semigroup(f, t);
  const HoloFunction lhs = sb_transform_holo(g, default_transform_rule(1, 32));
  const HoloFunction rhs = dilate(sb_transform_holo(f), t);
  for (const C& z : random_points(1, 4, 1.5, 23)) EXPECT_LT(rel(lhs(z), rhs(z)), 1e-5);
}
