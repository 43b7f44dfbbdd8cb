#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bargmann/gaussian_core.hpp"
#include "bargmann/phase_space.hpp"
#include "bargmann/polynomial.hpp"
#include "bargmann/transform.hpp"

using namespace bargmann;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TestFunction gauss() { return TestFunction::gaussian_quadratic(-0.5, 1); }

TestFunction x_gauss() {
  return TestFunction::poly_gaussian({Polynomial::coordinate(1, 0), -0.5, {0.0}}, "x e^{-x^2/2}");
}

TestFunction opaque(const TestFunction& f) {
  return TestFunction::custom(
      f.dim(), [f](RealPoint x) { return f(x); }, f.growth(), "opaque " + f.name());
}

cplx window_at(const Window& w, cplx z) {
  const cplx p[1] = {z};
  return w(ComplexPoint(p));
}

// integral e^{-x^2/2} e^{-(x-a)^2/2} e^{ibx} dx
cplx gaussian_windowed(double a, double b) {
  return std::sqrt(kPi) * std::exp(cplx(-a * a / 4.0 - b * b / 4.0, a * b / 2.0));
}

// Trapezoid sum of |g|^2 over [-h_a, h_a] x [-h_b, h_b]; spectrally accurate for Gaussian tails.
template <class G>
double trapezoid_l2_square(G g, double half_a, double half_b, double h) {
  const int na = static_cast<int>(std::lround(half_a / h));
  const int nb = static_cast<int>(std::lround(half_b / h));
  double s = 0.0;
  for (int i = -na; i <= na; ++i) {
    for (int j = -nb; j <= nb; ++j) s += std::norm(g(i * h, j * h));
  }
  return s * h * h;
}

}  // namespace

TEST(WindowedFt, CompleteTheSquare) {
  const Window w = Window::gaussian(1);
  const double zero[1] = {0.0};
  EXPECT_NEAR(std::abs(windowed_ft(gauss(), w, zero, zero) - 1.7724538509055159), 0.0, 1e-12);
  for (auto [a, b] : {std::pair{1.0, 0.5}, std::pair{-0.7, 2.0}, std::pair{2.5, -1.5}}) {
    const double av[1] = {a};
    const double bv[1] = {b};
    EXPECT_LT(rel(windowed_ft(gauss(), w, av, bv), gaussian_windowed(a, b)), 1e-10);
    EXPECT_LT(rel(windowed_ft(opaque(gauss()), w, av, bv), gaussian_windowed(a, b)), 1e-8);
  }
}

TEST(WindowedFt, ZeroFunction) {
  const double a[1] = {0.3};
  const double b[1] = {-1.0};
  EXPECT_EQ(windowed_ft(TestFunction::zero(1), Window::gaussian(1), a, b), cplx(0.0));
}

TEST(WindowedFt, IsometryConstant) {
  // ||F_phi f||^2 = 2 pi ||phi||^2 ||f||^2 with ||e^{-x^2/2}||^2 = sqrt(pi)
  const Window w = Window::gaussian(1);
  const double expected = 2.0 * kPi * std::sqrt(kPi);
  const std::vector<std::pair<TestFunction, double>> cases = {{gauss(), std::sqrt(kPi)},
                                                              {x_gauss(), 0.5 * std::sqrt(kPi)}};
  for (const auto& [f, norm2] : cases) {
    const double total = trapezoid_l2_square(
        [&](double a, double b) {
          const double av[1] = {a};
          const double bv[1] = {b};
          return windowed_ft(f, w, av, bv);
        },
        10.0, 10.0, 0.2);
    EXPECT_NEAR(total / norm2, expected, 1e-8 * expected) << f.name();
  }
}

TEST(Sigma, GaussianProfile) {
  const DecayProfile nu = DecayProfile::gaussian(1);
  for (double k : {0.0, 1.0, 1.7}) {
    const double kv[1] = {k};
    EXPECT_NEAR(sigma_of_nu(nu, kv), std::exp(k * k), 1e-9 * std::exp(k * k)) << k;
    EXPECT_NEAR(*nu.log_sigma_closed(kv), k * k, 1e-15);
  }
}

TEST(Sigma, NormalizedProfilesGiveOneAtZero) {
  const double zero[1] = {0.0};
  EXPECT_NEAR(sigma_of_nu(DecayProfile::quartic(), zero), 1.0, 1e-10);
  EXPECT_NEAR(sigma_of_nu(DecayProfile::gaussian(1), zero), 1.0, 1e-10);
}

TEST(Sigma, QuarticBoxGrowth) {
  const DecayProfile nu = DecayProfile::quartic();
  const double k[1] = {2.0};
  const double a = sigma_of_nu(nu, k, sigma_rule(nu, k, 6.0));
  const double b = sigma_of_nu(nu, k, sigma_rule(nu, k, 10.0));
  EXPECT_NEAR(a, b, 1e-8 * b);
}

TEST(Sigma, QuarticMomentSeries) {
  // sigma(k) = sum_m (2k)^{2m} / (2m)! E[b^{2m}], E[b^{2m}] = Gamma((2m+1)/4) / Gamma(1/4)
  const DecayProfile nu = DecayProfile::quartic();
  for (double k : {0.5, 1.0, 2.0}) {
    double series = 0.0;
    for (int m = 0; m < 120; ++m) {
      series += std::exp(2.0 * m * std::log(2.0 * k) - std::lgamma(2.0 * m + 1.0) +
                         std::lgamma((2.0 * m + 1.0) / 4.0) - std::lgamma(0.25));
    }
    const double kv[1] = {k};
    EXPECT_NEAR(sigma_of_nu(nu, kv), series, 1e-9 * series) << k;
  }
}

TEST(Profile, PositiveWithUnitMass) {
  for (const DecayProfile& nu : {DecayProfile::gaussian(1), DecayProfile::quartic()}) {
    double mass = 0.0;
    const double h = 0.01;
    for (int j = -800; j <= 800; ++j) {
      const double b[1] = {j * h};
      // e^{-b^4} underflows near |b| = 8; positivity lives in the log
      EXPECT_TRUE(std::isfinite(nu.log_nu(b))) << nu.name() << " b=" << b[0];
      mass += h * nu.nu(b);
    }
    EXPECT_NEAR(mass, 1.0, 1e-10) << nu.name();
  }
}

TEST(PhiFromNu, GaussianProfileValues) {
  const DecayProfile nu = DecayProfile::gaussian(1);
  const cplx zero[1] = {0.0};
  const cplx i[1] = {cplx(0.0, 1.0)};
  const double c = std::pow(2.0 * kPi, -0.5);
  EXPECT_LT(rel(phi_from_nu(nu, zero), cplx(0.3989422804014327)), 1e-6);
  EXPECT_LT(rel(phi_from_nu(nu, i), c * std::exp(0.5)), 1e-6);
}

TEST(PhiFromNu, GaussianFixedPoint) {
  const Window w = Window::from_nu(DecayProfile::gaussian(1));
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> re(-2.5, 2.5), im(-1.0, 1.0);
  for (int j = 0; j < 20; ++j) {
    const cplx z(re(gen), im(gen));
    EXPECT_LT(rel(window_at(w, z), std::pow(2.0 * kPi, -0.5) * std::exp(-0.5 * z * z)), 1e-5) << z;
  }
}

TEST(PhiFromNu, QuarticWindowIsRealAndEven) {
  const Window w = Window::from_nu(DecayProfile::quartic());
  for (double x = 0.0; x <= 4.0; x += 0.5) {
    const cplx v = window_at(w, x);
    EXPECT_LE(std::abs(v.imag()), 1e-9) << x;
    EXPECT_LE(std::abs(v - window_at(w, -x)), 1e-9) << x;
  }
}

TEST(PhiFromNu, QuarticWindowIsHolomorphic) {
  const Window w = Window::from_nu(DecayProfile::quartic());
  const double h = 1e-4;
  for (cplx z : {cplx(0.3, 0.2), cplx(-1.1, 0.7), cplx(2.0, -0.5)}) {
    const cplx dx = (window_at(w, z + h) - window_at(w, z - h)) / (2.0 * h);
    const cplx dy = (window_at(w, z + cplx(0.0, h)) - window_at(w, z - cplx(0.0, h))) / (2.0 * h);
    // f' = d/dx = -i d/dy
    EXPECT_LE(std::abs(dx + cplx(0.0, 1.0) * dy), 1e-6 * std::max(1.0, std::abs(dx))) << z;
  }
}

TEST(Convolution, GaussianOracle) {
  // (2 pi)^{-1/2} sqrt(pi) e^{-z^2/4}
  const auto exact = [](cplx z) { return std::pow(2.0 * kPi, -0.5) * std::sqrt(kPi) * std::exp(-0.25 * z * z); };
  const cplx zero[1] = {0.0};
  EXPECT_NEAR(std::abs(holo_convolution(Window::standard_gaussian(1), gauss(), zero) - 0.7071067811865476),
              0.0, 1e-12);
  const Window spectral = Window::from_nu(DecayProfile::gaussian(1));
  for (cplx z : {cplx(0.5, 0.5), cplx(-1.5, 1.0), cplx(2.0, -2.0)}) {
    const cplx p[1] = {z};
    EXPECT_LT(rel(holo_convolution(Window::standard_gaussian(1), gauss(), p), exact(z)), 1e-12) << z;
    EXPECT_LT(rel(holo_convolution(spectral, gauss(), p), exact(z)), 1e-6) << z;
  }
}

TEST(Convolution, ZeroFunction) {
  const cplx z[1] = {cplx(0.4, -0.3)};
  EXPECT_EQ(holo_convolution(Window::standard_gaussian(1), TestFunction::zero(1), z), cplx(0.0));
}

TEST(Convolution, TildeIsAnIsometry) {
  const std::vector<std::pair<TestFunction, double>> cases = {{gauss(), std::sqrt(kPi)},
                                                              {x_gauss(), 0.5 * std::sqrt(kPi)}};
  const std::vector<std::pair<DecayProfile, double>> profiles = {{DecayProfile::gaussian(1), 9.0},
                                                                 {DecayProfile::quartic(), 3.5}};
  for (const auto& [nu, b_half] : profiles) {
    for (const auto& [f, norm2] : cases) {
      const ConvolutionTransform C(Window::from_nu(nu), f, b_half);
      const double total = trapezoid_l2_square(
          [&](double a, double b) {
            const cplx z[1] = {cplx(a, b)};
            return C.tilde(z);
          },
          9.0, b_half, 0.1);
      EXPECT_NEAR(total, norm2, 1e-4 * norm2) << nu.name() << " " << f.name();
    }
  }
}

TEST(Covariance, GaussianWindow) {
  const CovarianceFit g00 = gaussian_covariance_check(Window::gaussian(1), 0.0, 0.0);
  EXPECT_LT(std::abs(g00.c - 1.0), 1e-12);
  EXPECT_LE(g00.residual, 1e-12);
  const CovarianceFit g11 = gaussian_covariance_check(Window::gaussian(1), 1.0, 1.0);
  EXPECT_LT(std::abs(g11.c - std::exp(cplx(0.5, -1.0))), 1e-9);
  EXPECT_LE(g11.residual, 1e-9);
}

TEST(Covariance, ModulatedWindow) {
  // alpha e^{-z^2/2} e^{i beta z}: c = e^{b^2/2} e^{-iab} e^{beta b}
  const double a = 0.5, b = -0.8, beta = 0.5;
  const CovarianceFit fit = gaussian_covariance_check(Window::gaussian(1, 2.0, {beta}), a, b);
  EXPECT_LT(rel(fit.c, std::exp(cplx(0.5 * b * b + beta * b, -a * b))), 1e-9);
  EXPECT_LE(fit.residual, 1e-9);
}

TEST(Covariance, QuarticWindowFails) {
  const CovarianceFit q = gaussian_covariance_check(Window::from_nu(DecayProfile::quartic()), 0.0, 1.0);
  EXPECT_GT(q.residual, 1e-2);
}

TEST(Equivalence, TildeMatchesWindowedTransform) {
  // C~ f(a+ib) e^{iab} = (2 pi)^{-1/2} pi^{-1/4} F_phi f(a, b), phi = e^{-x^2/2}
  const double scale = std::pow(2.0 * kPi, -0.5) * std::pow(kPi, -0.25);
  const Window phi = Window::standard_gaussian(1);
  const Window win = Window::gaussian(1);
  const TestFunction he2 = TestFunction::poly_gaussian(
      {Polynomial::hermite_product(std::vector<int>{2}), -0.5, {0.0}}, "He_2 e^{-x^2/2}");
  for (const TestFunction& f : {gauss(), x_gauss(), he2}) {
    for (double a : {-1.5, 0.0, 2.0}) {
      for (double b : {-2.0, 0.5, 1.0}) {
        const double av[1] = {a};
        const double bv[1] = {b};
        const cplx z[1] = {cplx(a, b)};
        const cplx lhs = holo_convolution_tilde(phi, f, z) * std::exp(cplx(0.0, a * b));
        EXPECT_LT(rel(lhs, scale * windowed_ft(f, win, av, bv)), 1e-8) << f.name();
        if (f.name() == gauss().name()) EXPECT_LT(rel(lhs, scale * gaussian_windowed(a, b)), 1e-10);
      }
    }
  }
}

TEST(Equivalence, GaussianConvolutionIsTheTransform) {
  const Window phi = Window::standard_gaussian(1);
  const QuadratureRule rule = default_transform_rule(1);
  for (const TestFunction& f : {TestFunction::hermite({2}), TestFunction::exp_linear({0.5})}) {
    for (cplx z : {cplx(0.0), cplx(1.0, -0.5), cplx(-0.8, 1.2)}) {
      // trapezoid for (2 pi)^{-1/2} integral e^{-(z-x)^2/2} f(x) dx
      cplx direct = 0.0;
      const double h = 0.01;
      for (int j = -1600; j <= 1600; ++j) {
        const double x[1] = {j * h};
        direct += h * std::exp(-0.5 * (z - x[0]) * (z - x[0])) * f(x);
      }
      direct *= std::pow(2.0 * kPi, -0.5);
      const cplx p[1] = {z};
      const cplx c = holo_convolution(phi, f, p);
      EXPECT_LT(std::abs(c - direct) / (1.0 + std::abs(direct)), 1e-9) << f.name() << " " << z;
      const cplx s = sb_transform(f, p, rule);
      EXPECT_LT(std::abs(c - s) / (1.0 + std::abs(s)), 1e-6) << f.name() << " " << z;
    }
  }
}
