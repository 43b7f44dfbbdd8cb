#include "bargmann/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bargmann/errors.hpp"

namespace bargmann {

GaussianWeight::GaussianWeight(WeightKind kind_, int d_, double p_) : kind(kind_), d(d_), p(p_) {
  if (d < 1 || d > kMaxDimension) throw ArgumentError("dimension must be in 1..3");
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("exponent p must lie in (1, inf)");
}

double GaussianWeight::decay(int axis) const {
  switch (kind) {
    case WeightKind::rho:
      return 0.5;
    case WeightKind::rho_s:
      return 1.0 / p;
    case WeightKind::mu:
      return 1.0;
    case WeightKind::mu_s:
      return axis < d ? 1.0 / (p - 1.0) : 1.0;
  }
  return 0.0;
}

double log_density(const GaussianWeight& w, std::span<const double> point) {
  if (static_cast<int>(point.size()) != w.domain_dim()) {
    throw ArgumentError("point dimension does not match the weight's domain");
  }
  const double d = w.d;
  double norm = 0.0;
  switch (w.kind) {
    case WeightKind::rho:
      norm = -0.5 * d * std::log(2.0 * kPi);
      break;
    case WeightKind::rho_s:
      norm = -0.5 * d * std::log(kPi * w.p);
      break;
    case WeightKind::mu:
      norm = -d * std::log(kPi);
      break;
    case WeightKind::mu_s:
      norm = -0.5 * d * std::log(kPi * (w.p - 1.0)) - 0.5 * d * std::log(kPi);
      break;
  }
  double q = 0.0;
  for (int k = 0; k < w.domain_dim(); ++k) q += w.decay(k) * point[k] * point[k];
  return norm - q;
}

double density(const GaussianWeight& w, std::span<const double> point) {
  return std::exp(log_density(w, point));
}

double hermite(int n, double x) {
  if (n < 0) throw ArgumentError("Hermite degree must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadratureRule matched_rule(const GaussianWeight& w, int order) {
  const int m = w.domain_dim();
  std::vector<double> c(m, 0.0), s(m);
  for (int k = 0; k < m; ++k) s[k] = 1.0 / std::sqrt(w.decay(k));
  return gauss_hermite_rule(order, c, s);
}

double total_mass(const GaussianWeight& w, const QuadratureRule& rule) {
  if (rule.dim() != w.domain_dim()) throw ArgumentError("rule does not match the weight's domain");
  double sum = 0.0;
  rule.for_each_node([&](RealPoint x, double, double lw) { sum += std::exp(lw + log_density(w, x)); });
  return sum;
}

namespace {

void check_norm_args(const TestFunction& f, double p, const GaussianWeight& w) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("norm exponent must be >= 1");
  if (w.complex_domain()) {
    throw ArgumentError("weighted_lp_norm takes a weight on R^d; use image_norm on C^d");
  }
  if (f.dim() != w.d) throw ArgumentError("function and weight dimensions differ");
}

// Decay of |f|^p w along each axis; must be positive for integrability.
double integrand_decay(const TestFunction& f, double p, const GaussianWeight& w) {
  const double a = w.decay(0) - p * f.growth().quadratic_rate;
  if (!(a > 0.0)) {
    throw DivergenceError("|" + f.name() + "|^p is not integrable against the weight");
  }
  return a;
}

}  // namespace

double weighted_lp_norm(const TestFunction& f, double p, const GaussianWeight& w,
                        const QuadratureRule& rule) {
  check_norm_args(f, p, w);
  integrand_decay(f, p, w);
  if (rule.dim() != w.d) throw ArgumentError("rule does not match the weight's domain");
  // log-sum-exp over the nodes
  std::vector<double> terms;
  terms.reserve(rule.size());
  double peak = -std::numeric_limits<double>::infinity();
  rule.for_each_node([&](RealPoint x, double, double lw) {
    const double lm = f.log_value(x).real();
    if (lm == -std::numeric_limits<double>::infinity()) return;
    const double t = lw + p * lm + log_density(w, x);
    terms.push_back(t);
    peak = std::max(peak, t);
  });
  if (terms.empty()) return 0.0;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return std::exp((peak + std::log(sum)) / p);
}

QuadratureRule lp_norm_rule(const TestFunction& f, double p, const GaussianWeight& w, int order) {
  check_norm_args(f, p, w);
  const double a = integrand_decay(f, p, w);
  const int d = w.d;
  const GrowthClass& g = f.growth();
  std::vector<double> centers(d);
  for (int k = 0; k < d; ++k) centers[k] = p * g.exp_rate.at(k) / (2.0 * a);
  const bool even = std::abs(p - std::round(p)) < 1e-14 && static_cast<long>(std::round(p)) % 2 == 0;
  if (even) {
    std::vector<double> scales(d, 1.0 / std::sqrt(a));
    return gauss_hermite_rule(order, centers, scales);
  }
  const double sigma = 1.0 / std::sqrt(2.0 * a);
  const double half = std::sqrt((50.0 + 4.0 * p * g.poly_degree) / a);
  const double panel = sigma * (d == 1 ? 0.5 : (d == 2 ? 1.0 : 1.5));
  const int panels = static_cast<int>(std::ceil(2.0 * half / panel));
  std::vector<int> pts(d, 8 * panels);
  std::vector<double> halves(d, half);
  return box_rule(pts, centers, halves);
}

double weighted_lp_norm(const TestFunction& f, double p, const GaussianWeight& w) {
  return weighted_lp_norm(f, p, w, lp_norm_rule(f, p, w));
}

double ground_state(RealPoint x) { return std::exp(-0.5 * norm_square(x)); }

double oscillator_residual(RealPoint x) {
  const int d = static_cast<int>(x.size());
  GaussianPolynomial phi;
  phi.poly = Polynomial::constant(d, 1.0);
  phi.alpha = -0.5;
  phi.linear.assign(d, 0.0);
  GaussianPolynomial h = phi;
  h.poly = Polynomial(d);
  for (int k = 0; k < d; ++k) {
    h.poly -= phi.derivative(k).derivative(k).poly;
    h.poly += phi.times_coordinate(k).times_coordinate(k).poly;
  }
  h.poly -= phi.poly * cplx(static_cast<double>(d));
  return std::abs(h(x));
}

TestFunction ground_state_map(const TestFunction& f, GroundStateDirection direction) {
  const double shift = direction == GroundStateDirection::to_gaussian ? 0.5 : -0.5;
  const std::string name =
      (direction == GroundStateDirection::to_gaussian ? "to_gaussian(" : "to_lebesgue(") +
      f.name() + ")";
  if (f.is_closed_form()) {
    GaussianPolynomial g = f.closed();
    g.alpha += shift;
    return TestFunction::poly_gaussian(std::move(g), name);
  }
  GrowthClass growth = f.growth();
  growth.quadratic_rate += shift;
  return TestFunction::custom(
      f.dim(),
      [f, shift](RealPoint x) { return f(x) * std::exp(shift * norm_square(x)); }, growth, name,
      std::nullopt, f.smooth());
}

}  // namespace bargmann
