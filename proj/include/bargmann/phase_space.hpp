#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bargmann/quadrature.hpp"
#include "bargmann/test_function.hpp"
#include "bargmann/types.hpp"

namespace bargmann {

struct SigmaCache;

/// Strictly positive profile nu on R^d with faster-than-exponential decay,
/// normalized to total mass 1.
class DecayProfile {
 public:
  /// pi^{-d/2} e^{-|b|^2}; sigma(k) = e^{|k|^2}.
  static DecayProfile gaussian(int d = 1);
  /// e^{-b^4} / (2 Gamma(5/4)), d = 1.
  static DecayProfile quartic();

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  /// Tail exponent q of nu ~ e^{-|b|^q}; q > 1 admits every exponential tilt.
  double tail_power() const { return tail_power_; }
  double log_nu(RealPoint b) const;
  double nu(RealPoint b) const { return std::exp(log_nu(b)); }
  /// log sigma(k) when known in closed form.
  std::optional<double> log_sigma_closed(RealPoint k) const;

 private:
  DecayProfile() = default;
  int dim_ = 1;
  std::string name_;
  double tail_power_ = 2.0;
  double log_norm_ = 0.0;
};

/// Box rule over b adapted to the peak of e^{2 k.b} nu(b).
QuadratureRule sigma_rule(const DecayProfile& nu, RealPoint k, double half_width = 8.0);

/// sigma(k) = integral e^{2 k.b} nu(b) db.
double sigma_of_nu(const DecayProfile& nu, RealPoint k, const QuadratureRule& rule);
double sigma_of_nu(const DecayProfile& nu, RealPoint k);
double log_sigma_of_nu(const DecayProfile& nu, RealPoint k);

struct SpectralOptions {
  /// Quadrature density over k.
  double nodes_per_unit = 16.0;
  /// Truncation: the integrand at the box edge sits this many e-folds below its peak.
  double margin = 40.0;
  /// Richardson check: a 1.25x larger box must agree to this relative tolerance.
  double tolerance = 1e-9;
};

/// phi(z) = (1/2pi) integral e^{-ik.z} / sqrt(sigma(k)) dk, d = 1.
/// Throws ConvergenceError when the two-box estimate exceeds the tolerance.
cplx phi_from_nu(const DecayProfile& nu, ComplexPoint z, const SpectralOptions& opts = {});

enum class WindowKind { gaussian, from_nu };

/// Window function phi, evaluatable on C^d.
///   gaussian(amp, beta): amp e^{-z^2/2} e^{i beta.z}
///   from_nu(profile):    the spectral integral above (d = 1)
class Window {
 public:
  static Window gaussian(int d, cplx amplitude = 1.0, std::vector<double> beta = {});
  /// The window produced by the Gaussian profile: (2 pi)^{-d/2} e^{-z^2/2}.
  static Window standard_gaussian(int d = 1);
  static Window from_nu(DecayProfile profile, SpectralOptions opts = {});

  int dim() const { return dim_; }
  WindowKind kind() const { return kind_; }
  std::string describe() const;
  cplx amplitude() const { return amplitude_; }
  const std::vector<double>& beta() const { return beta_; }
  const std::optional<DecayProfile>& profile() const { return profile_; }
  const SpectralOptions& options() const { return options_; }

  cplx operator()(ComplexPoint z) const;
  cplx operator()(RealPoint x) const;

  /// 1/sqrt(sigma(k)) for from_nu windows (cached per k).
  double inv_sqrt_sigma(double k) const;

 private:
  Window() = default;
  int dim_ = 1;
  WindowKind kind_ = WindowKind::gaussian;
  cplx amplitude_ = 1.0;
  std::vector<double> beta_;
  std::optional<DecayProfile> profile_;
  SpectralOptions options_;
  std::shared_ptr<SigmaCache> cache_;
};

/// F_phi f(a, b) = integral f(x) phi(x - a) e^{i b.x} dx.
/// Gaussian windows with closed-form f use the exact Gaussian integral; the
/// rule overload uses Gauss-Hermite recentred at the integrand peak (or a box as given).
cplx windowed_ft(const TestFunction& f, const Window& phi, RealPoint a, RealPoint b,
                 const QuadratureRule& rule);
cplx windowed_ft(const TestFunction& f, const Window& phi, RealPoint a, RealPoint b);

/// C_phi f(z) = integral phi(z - x) f(x) dx.
/// Gaussian windows: closed form (or the transform quadrature for custom f).
/// from_nu windows: (1/2pi) integral e^{-ik z} sigma^{-1/2}(k) fhat(k) dk with
/// fhat(k) = integral e^{ikx} f(x) dx, which needs a decaying closed-form f.
cplx holo_convolution(const Window& phi, const TestFunction& f, ComplexPoint z);

/// Reusable C_phi f for many points: the spectral samples are computed once
/// for |Im z| <= y_max.
class ConvolutionTransform {
 public:
  ConvolutionTransform(Window phi, TestFunction f, double y_max = 4.0);
  cplx operator()(ComplexPoint z) const;
  /// sqrt(nu(Im z)) C_phi f(z).
  cplx tilde(ComplexPoint z) const;
  double y_max() const { return y_max_; }

 private:
  Window phi_;
  TestFunction f_;
  double y_max_;
  std::vector<double> k_;
  std::vector<cplx> spectral_;  // lebesgue weight * sigma^{-1/2} * fhat / 2pi
};

/// sqrt(nu(b)) C_phi f(a + ib); Gaussian windows use the Gaussian profile.
cplx holo_convolution_tilde(const Window& phi, const TestFunction& f, ComplexPoint z);

struct CovarianceFit {
  cplx c;
  /// max |phi(x - (a+ib)) - c phi(x - a) e^{ibx}| / max |phi(x - (a+ib))| over the grid.
  double residual = 0.0;
  double log10_residual = 0.0;
};

/// Least-squares c_ab with phi(x - (a+ib)) = c_ab phi(x - a) e^{ib.x} on |x| <= 4 (d = 1).
CovarianceFit gaussian_covariance_check(const Window& phi, double a, double b, int points = 161);

}  // namespace bargmann
