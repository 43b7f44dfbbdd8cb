#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bargmann/polynomial.hpp"
#include "bargmann/test_function.hpp"
#include "bargmann/types.hpp"

namespace bargmann {

/// Growth of an entire function on C^d:
///   log|F(x+iy)| <= C + poly_degree log(1+|z|) + rate_x |x|^2 + rate_y |y|^2
///                   + linear_x . x + linear_y . y
/// Negative rates mean decay. Integrability gates compare these rates with
/// the Gaussian weight of each norm.
struct GrowthEnvelope {
  double rate_x = 0.0;
  double rate_y = 0.0;
  std::vector<double> linear_x;
  std::vector<double> linear_y;
  int poly_degree = 0;

  static GrowthEnvelope flat(int dim, int poly_degree = 0);
  double log_bound(ComplexPoint z) const;
};

enum class HoloProvenance { closed_form, quadrature_backed, dilated };

/// Evaluatable holomorphic function on C^d. Composition is lazy: every
/// transformation wraps the evaluator, nothing is resampled on a grid.
class HoloFunction {
 public:
  using Evaluator = std::function<cplx(ComplexPoint)>;

  HoloFunction(int dim, Evaluator fn, GrowthEnvelope envelope, HoloProvenance provenance,
               std::string name);

  /// z^e (monomial).
  static HoloFunction monomial(int dim, const Exponents& e, cplx c = 1.0);
  static HoloFunction constant(int dim, cplx c);
  static HoloFunction polynomial(const Polynomial& p, std::string name = "poly");
  /// exp(lambda z^2 / 2) with z^2 the complex square.
  static HoloFunction exp_quadratic(int dim, double lambda);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const GrowthEnvelope& envelope() const { return envelope_; }
  HoloProvenance provenance() const { return provenance_; }

  cplx operator()(ComplexPoint z) const;

  /// Source function for transforms computed by quadrature.
  const std::optional<TestFunction>& source() const { return source_; }
  /// For dilated functions: the undilated base and the parameter t.
  const std::shared_ptr<const HoloFunction>& base() const { return base_; }
  double dilation() const { return dilation_; }

  HoloFunction with_source(TestFunction f) const;
  HoloFunction renamed(std::string name) const;
  HoloFunction with_envelope(GrowthEnvelope envelope) const;

  /// c * F
  HoloFunction scaled(cplx c) const;
  /// F * z^e
  HoloFunction times_monomial(const Exponents& e) const;
  /// a F + b G (envelope: the larger of the two).
  static HoloFunction combine(cplx a, const HoloFunction& f, cplx b, const HoloFunction& g);

 private:
  friend HoloFunction make_dilated(const HoloFunction& base, double t, Evaluator fn,
                                   GrowthEnvelope env);

  int dim_;
  Evaluator fn_;
  GrowthEnvelope envelope_;
  HoloProvenance provenance_;
  std::string name_;
  std::optional<TestFunction> source_;
  std::shared_ptr<const HoloFunction> base_;
  double dilation_ = 0.0;
};

HoloFunction make_dilated(const HoloFunction& base, double t, HoloFunction::Evaluator fn,
                          GrowthEnvelope env);

/// Largest relative disagreement between dF/dx_k and (1/i) dF/dy_k, both by
/// centered differences with step h, over the given points and all axes.
double cauchy_riemann_residual(const HoloFunction& f, const std::vector<std::vector<cplx>>& points,
                               double h = 1e-5);

}  // namespace bargmann
