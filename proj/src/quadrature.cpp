#include "bargmann/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace bargmann {

Rule1D gauss_hermite_1d(int order) {
  if (order < 2) throw ArgumentError("Gauss-Hermite order must be at least 2");
  // Newton iteration on the orthonormal Hermite recurrence with the classic
  // asymptotic starting guesses (Stroud & Secrest).
  const int n = order;
  const double pim4 = std::pow(kPi, -0.25);
  std::vector<double> x(n), logw(n);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    logw[i] = logw[n - 1 - i] = std::log(2.0) - 2.0 * std::log(std::abs(pp));
  }
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_lebesgue.resize(n);
  for (int i = 0; i < n; ++i) {
    // recurrence produced descending nodes
    const int j = n - 1 - i;
    rule.nodes[i] = x[j];
    rule.weights[i] = std::exp(logw[j]);
    rule.log_lebesgue[i] = logw[j] + x[j] * x[j];
  }
  return rule;
}

Rule1D gauss_legendre_1d(int order, double a, double b) {
  if (order < 1) throw ArgumentError("Gauss-Legendre order must be positive");
  if (!(b > a)) throw ArgumentError("Gauss-Legendre interval is empty");
  const int n = order;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_lebesgue.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-16) break;
    }
    const double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    rule.nodes[i] = xm - xl * z;
    rule.nodes[n - 1 - i] = xm + xl * z;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  for (int i = 0; i < n; ++i) rule.log_lebesgue[i] = std::log(rule.weights[i]);
  return rule;
}

Rule1D composite_legendre_1d(int points, double a, double b, int per_panel) {
  if (points < 2) throw ArgumentError("box rule needs at least 2 points per axis");
  if (per_panel < 1) throw ArgumentError("panel order must be positive");
  const int panels = std::max(1, (points + per_panel - 1) / per_panel);
  const int q = std::min(per_panel, points);
  const Rule1D ref = gauss_legendre_1d(q, -1.0, 1.0);
  const double h = (b - a) / panels;
  Rule1D rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * q);
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int j = 0; j < q; ++j) {
      rule.nodes.push_back(mid + 0.5 * h * ref.nodes[j]);
      rule.weights.push_back(0.5 * h * ref.weights[j]);
    }
  }
  rule.log_lebesgue.resize(rule.weights.size());
  std::transform(rule.weights.begin(), rule.weights.end(), rule.log_lebesgue.begin(),
                 [](double w) { return std::log(w); });
  return rule;
}

QuadratureRule::QuadratureRule(QuadratureScheme scheme, std::vector<Rule1D> axes,
                               std::vector<double> centers, std::vector<double> scales,
                               double radius)
    : scheme_(scheme),
      axes_(std::move(axes)),
      centers_(std::move(centers)),
      scales_(std::move(scales)),
      radius_(radius) {
  if (axes_.empty() || axes_.size() > 2 * kMaxDimension) {
    throw ArgumentError("quadrature dimension must be in 1..6");
  }
  if (centers_.size() != axes_.size() || scales_.size() != axes_.size()) {
    throw ArgumentError("quadrature metadata does not match its axes");
  }
  for (const Rule1D& ax : axes_) {
    if (ax.nodes.size() != ax.weights.size() || ax.nodes.size() != ax.log_lebesgue.size()) {
      throw ArgumentError("quadrature nodes and weights differ in length");
    }
    for (double w : ax.weights) {
      if (!(w > 0.0)) throw ArgumentError("quadrature weights must be positive");
    }
  }
}

std::size_t QuadratureRule::size() const {
  std::size_t n = 1;
  for (const Rule1D& ax : axes_) n *= ax.nodes.size();
  return n;
}

std::vector<double> QuadratureRule::node(std::size_t i) const {
  std::vector<double> pt(axes_.size());
  for (int k = dim() - 1; k >= 0; --k) {
    const std::size_t n = axes_[k].nodes.size();
    pt[k] = axes_[k].nodes[i % n];
    i /= n;
  }
  return pt;
}

double QuadratureRule::weight(std::size_t i) const {
  double w = 1.0;
  for (int k = dim() - 1; k >= 0; --k) {
    const std::size_t n = axes_[k].nodes.size();
    w *= axes_[k].weights[i % n];
    i /= n;
  }
  return w;
}

double QuadratureRule::log_lebesgue_weight(std::size_t i) const {
  double lw = 0.0;
  for (int k = dim() - 1; k >= 0; --k) {
    const std::size_t n = axes_[k].nodes.size();
    lw += axes_[k].log_lebesgue[i % n];
    i /= n;
  }
  return lw;
}

double QuadratureRule::log_weight_function(RealPoint x) const {
  if (static_cast<int>(x.size()) != dim()) throw ArgumentError("point dimension mismatch");
  if (scheme_ == QuadratureScheme::truncated_box) return 0.0;
  double s = 0.0;
  for (int k = 0; k < dim(); ++k) {
    const double t = (x[k] - centers_[k]) / scales_[k];
    s -= t * t;
  }
  return s;
}

QuadratureRule QuadratureRule::affine(std::span<const double> centers,
                                      std::span<const double> scales) const {
  if (scheme_ != QuadratureScheme::gauss_hermite) {
    throw UnsupportedError("only Gauss-Hermite rules can be recentered");
  }
  if (static_cast<int>(centers.size()) != dim() || static_cast<int>(scales.size()) != dim()) {
    throw ArgumentError("recentering data does not match the rule dimension");
  }
  std::vector<Rule1D> axes(axes_.size());
  for (int k = 0; k < dim(); ++k) {
    if (!(scales[k] > 0.0)) throw ArgumentError("quadrature scale must be positive");
    const Rule1D& old = axes_[k];
    Rule1D& ax = axes[k];
    const double ratio = scales[k] / scales_[k];
    ax.nodes.resize(old.nodes.size());
    ax.weights.resize(old.nodes.size());
    ax.log_lebesgue.resize(old.nodes.size());
    for (std::size_t i = 0; i < old.nodes.size(); ++i) {
      const double t = (old.nodes[i] - centers_[k]) / scales_[k];
      ax.nodes[i] = centers[k] + scales[k] * t;
      ax.weights[i] = old.weights[i] * ratio;
      ax.log_lebesgue[i] = old.log_lebesgue[i] + std::log(ratio);
    }
  }
  return QuadratureRule(scheme_, std::move(axes), {centers.begin(), centers.end()},
                        {scales.begin(), scales.end()}, radius_);
}

std::string QuadratureRule::describe() const {
  if (scheme_ == QuadratureScheme::gauss_hermite) {
    return fmt::format("gauss_hermite m={} order={} scale={:.6g}", dim(), order_per_axis(),
                       scales_.front());
  }
  return fmt::format("truncated_box m={} points={} R={:.6g}", dim(), order_per_axis(), radius_);
}

QuadratureRule gauss_hermite_rule(int order, std::span<const double> centers,
                                  std::span<const double> scales) {
  if (centers.size() != scales.size() || centers.empty()) {
    throw ArgumentError("Gauss-Hermite centers and scales must have equal, positive length");
  }
  const Rule1D ref = gauss_hermite_1d(order);
  std::vector<Rule1D> axes;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    if (!(scales[k] > 0.0)) throw ArgumentError("quadrature scale must be positive");
    Rule1D ax = ref;
    const double ls = std::log(scales[k]);
    for (std::size_t i = 0; i < ax.nodes.size(); ++i) {
      ax.nodes[i] = centers[k] + scales[k] * ref.nodes[i];
      ax.weights[i] = ref.weights[i] * scales[k];
      ax.log_lebesgue[i] = ref.log_lebesgue[i] + ls;
    }
    axes.push_back(std::move(ax));
  }
  return QuadratureRule(QuadratureScheme::gauss_hermite, std::move(axes),
                        {centers.begin(), centers.end()}, {scales.begin(), scales.end()}, 0.0);
}

QuadratureRule box_rule(std::span<const int> points_per_axis, std::span<const double> centers,
                        std::span<const double> half_widths) {
  if (points_per_axis.size() != centers.size() || centers.size() != half_widths.size()) {
    throw ArgumentError("box rule axes disagree in length");
  }
  std::vector<Rule1D> axes;
  double radius = 0.0;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    if (!(half_widths[k] > 0.0)) throw ArgumentError("box radius must be positive");
    axes.push_back(composite_legendre_1d(points_per_axis[k], centers[k] - half_widths[k],
                                         centers[k] + half_widths[k]));
    radius = std::max(radius, half_widths[k]);
  }
  return QuadratureRule(QuadratureScheme::truncated_box, std::move(axes),
                        {centers.begin(), centers.end()},
                        std::vector<double>(centers.size(), 1.0), radius);
}

QuadratureRule box_rule(int points_per_axis, int m, double radius) {
  std::vector<int> pts(m, points_per_axis);
  std::vector<double> c(m, 0.0), h(m, radius);
  return box_rule(pts, c, h);
}

QuadratureRule quad_rule(QuadratureScheme scheme, int order_per_axis, int m,
                         std::span<const double> center, double scale,
                         std::optional<double> radius) {
  if (m < 1 || m > 2 * kMaxDimension) throw ArgumentError("integration dimension must be in 1..6");
  if (order_per_axis < 2) throw ArgumentError("quadrature order must be at least 2");
  if (!(scale > 0.0)) throw ArgumentError("quadrature scale must be positive");
  std::vector<double> c(m, 0.0);
  if (!center.empty()) {
    if (static_cast<int>(center.size()) != m) throw ArgumentError("center dimension mismatch");
    c.assign(center.begin(), center.end());
  }
  if (scheme == QuadratureScheme::gauss_hermite) {
    std::vector<double> s(m, scale);
    return gauss_hermite_rule(order_per_axis, c, s);
  }
  if (!radius) throw ArgumentError("truncated_box needs a radius R");
  std::vector<int> pts(m, order_per_axis);
  std::vector<double> h(m, *radius);
  return box_rule(pts, c, h);
}

}  // namespace bargmann
