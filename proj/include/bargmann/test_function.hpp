#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bargmann/polynomial.hpp"
#include "bargmann/types.hpp"

namespace bargmann {

/// Growth metadata of a function on R^d:
///   |f(x)| <= C (1 + |x|)^poly_degree exp(quadratic_rate |x|^2 + exp_rate . x).
/// This is the admissibility gate for every integral the library evaluates;
/// quadrature never decides convergence on its own.
struct GrowthClass {
  double quadratic_rate = 0.0;
  std::vector<double> exp_rate;
  int poly_degree = 0;
};

/// P(x) exp(alpha |x|^2 + a . x) with a in C^d; the closed family every
/// built-in test function belongs to.
struct GaussianPolynomial {
  Polynomial poly{1};
  double alpha = 0.0;
  std::vector<cplx> linear;

  int dim() const { return poly.dim(); }
  cplx operator()(RealPoint x) const;
  /// Entire continuation to C^d.
  cplx operator()(ComplexPoint z) const;
  GaussianPolynomial derivative(int k) const;
  GaussianPolynomial times_coordinate(int k) const;
  GrowthClass growth() const;
};

/// Value of  integral_{R^d} P(x) exp(sum_k (-A x_k^2 + B_k x_k)) dx  split as
/// exp(log_factor) * value so callers can fold further exponents in before
/// exponentiating. Requires A > 0.
struct GaussianIntegral {
  cplx log_factor;
  cplx value;
  cplx total() const { return value * std::exp(log_factor); }
};

GaussianIntegral gaussian_polynomial_integral(const Polynomial& poly, double a_coeff,
                                              std::span<const cplx> b_coeff);

enum class TestFunctionKind {
  hermite_product,
  exp_linear,
  gaussian_quadratic,
  polynomial,
  poly_gaussian,
  custom
};

/// A function on R^d with known growth class and, for the closed family, an
/// exact Segal-Bargmann transform. Immutable and cheap to copy.
class TestFunction {
 public:
  using Evaluator = std::function<cplx(RealPoint)>;
  using TransformEvaluator = std::function<cplx(ComplexPoint)>;

  /// He_{n_1}(x_1) ... He_{n_d}(x_d); transform z^n.
  static TestFunction hermite(std::vector<int> n);
  /// e^{a . x}.
  static TestFunction exp_linear(std::vector<cplx> a);
  /// e^{alpha |x|^2}, alpha < 1/2.
  static TestFunction gaussian_quadratic(double alpha, int dim);
  static TestFunction polynomial(Polynomial p);
  static TestFunction poly_gaussian(GaussianPolynomial g, std::string name = {});
  static TestFunction custom(int dim, Evaluator fn, GrowthClass growth, std::string name,
                             std::optional<TransformEvaluator> transform = std::nullopt,
                             bool smooth = true);
  static TestFunction zero(int dim);

  int dim() const { return dim_; }
  TestFunctionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const GrowthClass& growth() const { return growth_; }
  bool smooth() const { return smooth_; }

  cplx operator()(RealPoint x) const;
  /// Complex logarithm of f(x) (real part -inf at zeros). Exact for the closed
  /// family, so Gaussian factors never overflow before they are combined.
  cplx log_value(RealPoint x) const;

  /// True for every variant except custom.
  bool is_closed_form() const { return closed_.has_value(); }
  /// Throws UnsupportedError for custom functions.
  const GaussianPolynomial& closed() const;

  bool has_transform_closed_form() const { return is_closed_form() || transform_.has_value(); }
  /// Exact S f(z); nullopt when no closed form exists.
  std::optional<cplx> transform_closed_form(ComplexPoint z) const;

  TestFunction renamed(std::string name) const;

  /// a f + b g. Stays in the closed family when both Gaussian factors agree.
  static TestFunction combine(cplx a, const TestFunction& f, cplx b, const TestFunction& g);

 private:
  TestFunction() = default;

  int dim_ = 1;
  TestFunctionKind kind_ = TestFunctionKind::custom;
  std::string name_;
  GrowthClass growth_;
  bool smooth_ = true;
  std::optional<GaussianPolynomial> closed_;
  Evaluator custom_;
  std::optional<TransformEvaluator> transform_;
};

/// x^alpha (d/dx)^beta f for the closed family (d = 1 multi-indices collapse to ints).
TestFunction moment_derivative(const TestFunction& f, const Exponents& alpha,
                               const Exponents& beta);

}  // namespace bargmann
