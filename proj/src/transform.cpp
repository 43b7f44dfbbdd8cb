#include "bargmann/transform.hpp"

#include <cmath>

#include "bargmann/errors.hpp"
#include "bargmann/gaussian_core.hpp"
#include "bargmann/inversion.hpp"

namespace bargmann {

namespace {

void check_point(const TestFunction& f, ComplexPoint z) {
  if (static_cast<int>(z.size()) != f.dim()) throw ArgumentError("transform point dimension mismatch");
}

double transform_decay(const TestFunction& f) {
  const double a = 0.5 - f.growth().quadratic_rate;
  if (!(a > 0.0)) {
    throw DivergenceError("S(" + f.name() + ") diverges: quadratic growth rate must be < 1/2");
  }
  return a;
}

// Moves a Gauss-Hermite rule onto exp(-a (x - c)^2); box rules pass through.
QuadratureRule recenter(const QuadratureRule& rule, std::span<const double> centers, double a) {
  if (rule.scheme() != QuadratureScheme::gauss_hermite) return rule;
  std::vector<double> scales(centers.size(), 1.0 / std::sqrt(a));
  return rule.affine(centers, scales);
}

}  // namespace

QuadratureRule default_transform_rule(int d, int order) {
  return quad_rule(QuadratureScheme::gauss_hermite, order, d, {}, std::sqrt(2.0));
}

GrowthEnvelope transform_envelope(const TestFunction& f) {
  const int d = f.dim();
  const double alpha = f.growth().quadratic_rate;
  if (!(alpha < 0.5)) throw DivergenceError("S(" + f.name() + ") diverges");
  const double denom = 1.0 - 2.0 * alpha;
  GrowthEnvelope env = GrowthEnvelope::flat(d, f.growth().poly_degree);
  env.rate_x = alpha / denom;
  if (f.is_closed_form()) {
    const GaussianPolynomial& g = f.closed();
    env.rate_y = -alpha / denom;
    for (int k = 0; k < d; ++k) {
      env.linear_x[k] = g.linear[k].real() / denom;
      env.linear_y[k] = -g.linear[k].imag() / denom;
    }
  } else {
    // only |f| is known: the kernel modulus e^{y^2/2} cannot be beaten
    env.rate_y = 0.5;
    for (int k = 0; k < d; ++k) env.linear_x[k] = f.growth().exp_rate[k] / denom;
  }
  return env;
}

cplx sb_transform(const TestFunction& f, ComplexPoint z, const QuadratureRule& rule) {
  check_point(f, z);
  if (rule.dim() != f.dim()) throw ArgumentError("rule dimension does not match the function");
  const double a = transform_decay(f);
  const int d = f.dim();
  std::vector<double> centers(d);
  for (int k = 0; k < d; ++k) centers[k] = (z[k].real() + f.growth().exp_rate[k]) / (2.0 * a);
  const QuadratureRule r = recenter(rule, centers, a);
  const double log_norm = -0.5 * d * std::log(2.0 * kPi);
  return integrate_exp(r, [&](RealPoint x) {
    cplx e = log_norm;
    for (int k = 0; k < d; ++k) {
      const cplx u = z[k] - x[k];
      e -= 0.5 * u * u;
    }
    return e + f.log_value(x);
  });
}

HoloFunction sb_transform_holo(const TestFunction& f, const QuadratureRule& rule) {
  const GrowthEnvelope env = transform_envelope(f);
  const std::string name = "S[" + f.name() + "]";
  if (f.has_transform_closed_form()) {
    return HoloFunction(
               f.dim(), [f](ComplexPoint z) { return *f.transform_closed_form(z); }, env,
               HoloProvenance::closed_form, name)
        .with_source(f);
  }
  return HoloFunction(
             f.dim(), [f, rule](ComplexPoint z) { return sb_transform(f, z, rule); }, env,
             HoloProvenance::quadrature_backed, name)
      .with_source(f);
}

HoloFunction sb_transform_holo(const TestFunction& f) {
  return sb_transform_holo(f, default_transform_rule(f.dim()));
}

double sp_constant(double p, int d) {
  if (!(p > 1.0)) throw DomainError("exponent p must lie in (1, inf)");
  const double one = std::pow(2.0 * kPi, -0.5) * std::pow(p / (p - 1.0), 0.25) * std::pow(kPi, -0.25);
  return std::pow(one, d);
}

namespace {

void check_lebesgue_gate(const TestFunction& f) {
  if (!(f.growth().quadratic_rate < 0.0)) {
    throw DivergenceError("S_p needs f in L^q(dx); " + f.name() + " does not decay");
  }
}

}  // namespace

cplx sp_transform(const TestFunction& f, double p, ComplexPoint z, const QuadratureRule& rule) {
  check_point(f, z);
  if (!(p > 1.0)) throw DomainError("exponent p must lie in (1, inf)");
  check_lebesgue_gate(f);
  if (rule.dim() != f.dim()) throw ArgumentError("rule dimension does not match the function");
  const int d = f.dim();
  const double q = (p - 1.0) / (2.0 * p);
  const double shift = p / (p - 1.0);
  const double a = q - f.growth().quadratic_rate;
  std::vector<double> centers(d);
  for (int k = 0; k < d; ++k) centers[k] = (z[k].real() + f.growth().exp_rate[k]) / (2.0 * a);
  const QuadratureRule r = recenter(rule, centers, a);
  const double log_c = std::log(sp_constant(p, d));
  return integrate_exp(r, [&](RealPoint x) {
    cplx e = log_c;
    for (int k = 0; k < d; ++k) {
      const double xt = z[k].real();
      const double yt = z[k].imag();
      const double u = x[k] - shift * xt;
      e += cplx(-q * u * u, yt * (x[k] - xt));
    }
    return e + f.log_value(x);
  });
}

cplx sp_transform_closed(const TestFunction& f, double p, ComplexPoint z) {
  check_point(f, z);
  check_lebesgue_gate(f);
  const int d = f.dim();
  GaussianPolynomial g = f.closed();
  g.alpha += 1.0 / (2.0 * p);
  g.poly *= std::pow(kPi * p, 0.25 * d);
  const TestFunction h = TestFunction::poly_gaussian(std::move(g));
  const GaussianWeight mu_s(WeightKind::mu_s, d, p);
  const std::vector<double> coords = to_real_coordinates(z);
  return std::exp(0.5 * log_density(mu_s, coords)) * *h.transform_closed_form(z);
}

HoloFunction dilate(const HoloFunction& f, double t) {
  const double s = std::exp(-t);
  GrowthEnvelope env = f.envelope();
  env.rate_x *= s * s;
  env.rate_y *= s * s;
  for (double& v : env.linear_x) v *= s;
  for (double& v : env.linear_y) v *= s;
  return make_dilated(
      f, t,
      [f, s](ComplexPoint z) {
        std::vector<cplx> w(z.begin(), z.end());
        for (cplx& v : w) v *= s;
        return f(w);
      },
      env);
}

TestFunction ou_semigroup(const TestFunction& f, double t, double inversion_p) {
  if (!(t >= 0.0)) throw DomainError("semigroup time must be non-negative");
  const HoloFunction g = dilate(sb_transform_holo(f), t);
  const InversionConfig cfg = InversionConfig::nested(inversion_p, f.dim());
  return TestFunction::custom(
      f.dim(), [g, cfg](RealPoint x) { return adjoint_inverse(g, cfg, x); }, f.growth(),
      "ou(" + std::to_string(t) + "," + f.name() + ")", std::nullopt, f.smooth());
}

}  // namespace bargmann
