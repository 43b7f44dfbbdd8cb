#pragma once

#include <string>
#include <vector>

#include "bargmann/gaussian_core.hpp"
#include "bargmann/holo_function.hpp"
#include "bargmann/inversion.hpp"
#include "bargmann/quadrature.hpp"
#include "bargmann/report.hpp"
#include "bargmann/test_function.hpp"

namespace bargmann {

/// Image-side functionals, all built on the weight w(x+iy) = e^{-y^2/2} e^{-x^2/2(p-1)}.
///   L1       integral |F| w
///   LpPrime  (integral |F w|^{p'})^{1/p'}
///   Mixed    (integral_x (integral_y |F| w dy)^p dx)^{1/p}
///   Hyper    (integral |F(sqrt(p-1) z)|^2 e^{-|z|^2} pi^{-d})^{1/2}
enum class ImageNormKind { L1, LpPrime, Mixed, Hyper };

std::string to_string(ImageNormKind kind);

/// f_norm e^{y^2/2} e^{x^2/2(p-1)}.
double holder_envelope(double p, double f_norm, ComplexPoint z);
double log_holder_envelope(double p, double f_norm, ComplexPoint z);

/// log(|F(z)| e^{-y^2/2} e^{-x^2/2(p-1)}).
double log_weighted_modulus(const HoloFunction& f, double p, ComplexPoint z);

/// Uniform grid on C^d: every real and imaginary coordinate on
/// [-extent, extent] with n points.
struct ComplexGrid {
  double extent_x = 5.0;
  double extent_y = 5.0;
  int n = 41;

  std::vector<std::vector<cplx>> points(int d) const;
  std::string describe(int d) const;
};

struct ShellMaxima {
  std::vector<double> radii;
  std::vector<double> maxima;
  bool strictly_decreasing = false;
};

/// Maxima of the weighted modulus over the spheres |z| = r. For d = 1 the
/// circle is sampled uniformly; for d > 1 the samples are seeded random points.
ShellMaxima shell_maxima(const HoloFunction& f, double p, const std::vector<double>& radii,
                         int samples = 720);

struct HolderOptions {
  /// Absolute tolerance on the log scale.
  double tolerance = 1e-7;
  std::vector<double> shell_radii{4.0, 5.0, 6.0};
  int shell_samples = 720;
  /// Debug only: multiplies the y-exponent of the envelope (1 = correct).
  double envelope_y_scale = 1.0;
};

/// |S f| <= holder_envelope(p, ||f||_{L^p(rho)}) on the grid, plus strict
/// decrease of the shell maxima over the configured radii.
CheckReport check_holder(const TestFunction& f, double p, const ComplexGrid& grid,
                         const HolderOptions& options = {});

/// Rule adapted to the integrand of `kind` using the envelope of F.
/// Gauss-Hermite when the integrand is smooth (Hyper; LpPrime with even p'),
/// composite Gauss-Legendre boxes otherwise. order <= 0 picks a per-dimension default.
QuadratureRule image_norm_rule(const HoloFunction& f, double p, ImageNormKind kind, int order = 0);

/// Throws DivergenceError when the envelope of F exceeds the weight.
double image_norm(const HoloFunction& f, double p, ImageNormKind kind, const QuadratureRule& rule);
double image_norm(const HoloFunction& f, double p, ImageNormKind kind);

/// (integral |F|^2 dw)^{1/2} for the C^d weights mu and mu_s, Gauss-Hermite
/// adapted to the envelope of F. order <= 0 picks a per-dimension default.
double holo_l2_norm(const HoloFunction& f, const GaussianWeight& w, int order = 0);

/// "Finite norm" probe: boxes [-8,8]^{2d} and [-12,12]^{2d}, the second with
/// 1.5x the nodes per axis; finite when the relative change is <= 2%.
/// For d > 1 with default sizes the boxes are centred on the integrand peak,
/// half-widths capped by its decay.
struct FiniteNormProbe {
  double small = 0.0;
  double large = 0.0;
  double change = 0.0;
  bool finite = false;
};
FiniteNormProbe probe_finite_norm(const HoloFunction& f, double p, ImageNormKind kind,
                                  int points_small = 0);

/// image_norm(S f, p, Hyper) <= ||f||_{L^p(rho)} (1 + tolerance), p in (1, 2].
CheckReport hyper_check(const TestFunction& f, double p, const QuadratureRule& rule,
                        double tolerance = 1e-7);
CheckReport hyper_check(const TestFunction& f, double p, double tolerance = 1e-7);

struct HyperReconstruction {
  TestFunction f;
  double bound = 0.0;
  double f_norm = 0.0;
  CheckReport report;
};

/// f = S^{*,p} F and the check ||f||_{L^p(rho)} <= image_norm(F, p, Hyper), p >= 2.
HyperReconstruction hyper_reconstruct(const HoloFunction& f, double p, const InversionConfig& cfg,
                                      double tolerance = 1e-6);

/// Growth class of S^{*,p} F implied by the envelope of F.
GrowthClass inverse_growth(const GrowthEnvelope& env, int d);

enum class SchwartzTrend { stable, divergent, inconclusive };
std::string to_string(SchwartzTrend trend);

struct SchwartzGrid {
  double extent_small = 5.0;
  double extent_large = 8.0;
  double spacing = 0.05;
};

struct SchwartzConstants {
  std::vector<double> small;
  std::vector<double> large;
  std::vector<double> ratio;
  std::vector<SchwartzTrend> trend;
};

/// C_n = max |F| e^{-y^2/2} e^{-x^2/2(p-1)} (1+|x|)^n (1+|y|)^n on both grids,
/// n = 0..n_max. stable: change <= 1%; divergent: ratio > 2; otherwise inconclusive.
SchwartzConstants schwartz_constants(const HoloFunction& f, double p, int n_max,
                                     const SchwartzGrid& grid = {});

/// (x_k - d/dx_k) f: symbolic for the closed family, central differences
/// (h = 1e-5) for smooth custom functions.
TestFunction creation_apply(const TestFunction& f, int k);

/// For |alpha|, |beta| <= cap: x^alpha D^beta f has a finite L^p(rho) norm
/// (stable under box growth) and its ratio to e^{x^2/2p} has a stable grid max.
CheckReport schwartz_membership_suite(const TestFunction& f, double p, int cap = 3);

}  // namespace bargmann
