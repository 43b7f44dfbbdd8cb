#pragma once

#include "bargmann/quadrature.hpp"
#include "bargmann/test_function.hpp"

namespace bargmann {

/// Which Gaussian reference density a GaussianWeight stands for.
///   rho    (2 pi)^{-d/2} e^{-x^2/2}                        on R^d
///   rho_s  (pi p)^{-d/2} e^{-x^2/p}                        on R^d
///   mu     pi^{-d} e^{-|z|^2}                              on C^d
///   mu_s   (pi (p-1))^{-d/2} pi^{-d/2} e^{-x^2/(p-1)} e^{-y^2}  on C^d
enum class WeightKind { rho, rho_s, mu, mu_s };

struct GaussianWeight {
  WeightKind kind = WeightKind::rho;
  int d = 1;
  double p = 2.0;

  /// Validates d in 1..3 and p in (1, inf).
  GaussianWeight(WeightKind kind, int d, double p = 2.0);

  bool complex_domain() const { return kind == WeightKind::mu || kind == WeightKind::mu_s; }
  /// d for rho/rho_s, 2d real coordinates for mu/mu_s.
  int domain_dim() const { return complex_domain() ? 2 * d : d; }
  /// Coefficient of |x_k|^2 in -log density for axis k of the domain.
  double decay(int axis) const;
};

double log_density(const GaussianWeight& w, std::span<const double> point);
double density(const GaussianWeight& w, std::span<const double> point);

/// Probabilists' Hermite polynomial He_n(x) (physicists' H_n is not used).
double hermite(int n, double x);

/// Gauss-Hermite rule whose weight function is exactly proportional to w.
QuadratureRule matched_rule(const GaussianWeight& w, int order = kDefaultHermiteOrder);

/// Integral of the density over its domain under `rule` (normalization check).
double total_mass(const GaussianWeight& w, const QuadratureRule& rule);

/// (integral |f|^p dw)^{1/p} with the given rule. Throws DivergenceError when
/// the growth metadata of f makes |f|^p w non-integrable, and ArgumentError for
/// the C^d weights (those norms live with the holomorphic functions).
double weighted_lp_norm(const TestFunction& f, double p, const GaussianWeight& w,
                        const QuadratureRule& rule);

/// Rule adapted to the integrand |f|^p w: Gauss-Hermite when p is an even
/// integer (|f|^p is then smooth), composite Gauss-Legendre otherwise so that
/// zeros of f (kinks of |f|^p) cost algebraic rather than spectral accuracy.
QuadratureRule lp_norm_rule(const TestFunction& f, double p, const GaussianWeight& w,
                            int order = kDefaultHermiteOrder);

/// weighted_lp_norm with lp_norm_rule.
double weighted_lp_norm(const TestFunction& f, double p, const GaussianWeight& w);

/// phi_0(x) = exp(-x^2/2).
double ground_state(RealPoint x);

/// (-Laplacian + x^2) phi_0 - d phi_0 at x, computed symbolically.
double oscillator_residual(RealPoint x);

enum class GroundStateDirection { to_gaussian, to_lebesgue };

/// to_gaussian: f / phi_0; to_lebesgue: f * phi_0.
TestFunction ground_state_map(const TestFunction& f, GroundStateDirection direction);

}  // namespace bargmann
