#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bargmann/holo_function.hpp"
#include "bargmann/quadrature.hpp"

namespace bargmann {

/// [p / (2 pi^2 (p-1))]^{d/2}: normalizes the adjoint inversion so S1 -> 1.
double inversion_constant(double p, int d);

/// c_inv (p-1)^{-d/(2p)}: ||S^{*,p} F||_{L^p(rho)} <= this * (L1 image norm of F).
double stability_constant(double p, int d);

struct InversionConfig {
  double p = 2.0;
  int d = 1;
  /// Box half-width R on every axis; default max(10, p/(p-1) |x|_inf + 8).
  std::optional<double> radius;
  /// Nodes per axis; 0 picks 16 per unit length for boxes (160 at R = 10)
  /// and 48 for Gauss-Hermite.
  int order = 0;
  /// truncated_box is the reference scheme. gauss_hermite adapts the nodes to
  /// the kernel Gaussians and the envelope of F; it is cheap enough to nest
  /// inside norms and semigroups.
  QuadratureScheme scheme = QuadratureScheme::truncated_box;

  static InversionConfig standard(double p, int d = 1);
  static InversionConfig nested(double p, int d = 1, int order = 48);

  double c_inv() const { return inversion_constant(p, d); }
  double default_radius(RealPoint x) const;
  void validate() const;
};

struct InversionResult {
  cplx value;
  double radius = 0.0;
  int points_per_axis = 0;
  std::size_t nodes = 0;
  /// The box cuts into the integrand (R below the default headroom or the
  /// envelope-predicted peak of the integrand).
  bool truncation_warning = false;
};

/// S^{*,p} F(x) = c_inv e^{x^2/p} integral e^{-(x~ - i y~ - x)^2/2} F(x~ + i y~)
///                e^{-x~^2/(p-1)} e^{-y~^2} dx~ dy~.
/// Throws DivergenceError unless the envelope of F has finite L1 image norm.
InversionResult adjoint_inverse_detailed(const HoloFunction& f, const InversionConfig& cfg,
                                         RealPoint x);
cplx adjoint_inverse(const HoloFunction& f, const InversionConfig& cfg, RealPoint x);

/// adjoint_inverse at many points. Box rules share one radius (the default
/// for the largest |x| unless cfg.radius is set) and sample F only once.
std::vector<InversionResult> adjoint_inverse_grid(const HoloFunction& f, const InversionConfig& cfg,
                                                  const std::vector<std::vector<double>>& xs);

/// d f / d x_k from F: the inversion integral with the extra factor
/// (-x~_k/(p-1) - i y~_k), plus (2 x_k / p) f(x).
cplx transform_derivative(const HoloFunction& f, const InversionConfig& cfg, RealPoint x, int k);

using PhaseSpaceFunction = std::function<cplx(ComplexPoint)>;

/// S_p^* G(x) = c integral e^{i x~.y~} e^{-i x.y~}
///              exp(-((p-1)/2p) |x - p x~/(p-1)|^2) G(x~ + i y~) dx~ dy~
/// with c = sp_constant(p, d); `rule` runs over the 2d real coordinates.
cplx sp_adjoint(const PhaseSpaceFunction& g, double p, RealPoint x, const QuadratureRule& rule);

}  // namespace bargmann
