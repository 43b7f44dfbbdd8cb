#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bargmann/errors.hpp"
#include "bargmann/types.hpp"

namespace bargmann {

enum class QuadratureScheme { gauss_hermite, truncated_box };

/// One axis of a tensor-product rule.
///
/// `weights` integrate against the axis weight function (e^{-((x-c)/s)^2} for
/// Gauss-Hermite, 1 for a box); `log_lebesgue` holds the logarithms of the
/// weights that integrate a plain function against dx.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_lebesgue;
};

/// Reference Gauss-Hermite rule for the weight e^{-t^2} (nodes ascending).
Rule1D gauss_hermite_1d(int order);

/// Gauss-Legendre rule on [a, b].
Rule1D gauss_legendre_1d(int order, double a, double b);

/// Composite Gauss-Legendre on [a, b]: ceil(points / per_panel) equal panels
/// with per_panel nodes each.
Rule1D composite_legendre_1d(int points, double a, double b, int per_panel = 8);

/// Tensor-product quadrature rule over R^m.
///
/// Nodes are never materialized as a flat list; m <= 6 and rules over C^3 can
/// have far more nodes than fit in memory. Use for_each_node or node(i).
class QuadratureRule {
 public:
  QuadratureRule(QuadratureScheme scheme, std::vector<Rule1D> axes, std::vector<double> centers,
                 std::vector<double> scales, double radius);

  QuadratureScheme scheme() const { return scheme_; }
  int dim() const { return static_cast<int>(axes_.size()); }
  std::size_t size() const;
  const std::vector<Rule1D>& axes() const { return axes_; }
  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& scales() const { return scales_; }
  double radius() const { return radius_; }
  /// Node count of the first axis (all axes share it for rules built here).
  int order_per_axis() const { return static_cast<int>(axes_.front().nodes.size()); }

  std::vector<double> node(std::size_t i) const;
  double weight(std::size_t i) const;
  double log_lebesgue_weight(std::size_t i) const;

  /// Weight function of the rule at x (1 inside the box for truncated_box).
  double log_weight_function(RealPoint x) const;

  /// Gauss-Hermite only: the same reference rule moved to new centers/scales.
  QuadratureRule affine(std::span<const double> centers, std::span<const double> scales) const;

  std::string describe() const;

  /// Calls fn(point, weight, log_lebesgue_weight) for every node.
  template <typename Fn>
  void for_each_node(Fn&& fn) const;

 private:
  QuadratureScheme scheme_;
  std::vector<Rule1D> axes_;
  std::vector<double> centers_;
  std::vector<double> scales_;
  double radius_;
};

/// Builds a rule.
///
/// gauss_hermite: nodes adapted to e^{-((x-center)/scale)^2} on every axis.
/// truncated_box: composite Gauss-Legendre on [center - R, center + R]^m; R required.
QuadratureRule quad_rule(QuadratureScheme scheme, int order_per_axis, int m,
                         std::span<const double> center, double scale,
                         std::optional<double> radius = std::nullopt);

/// Gauss-Hermite rule with per-axis centers and scales.
QuadratureRule gauss_hermite_rule(int order, std::span<const double> centers,
                                  std::span<const double> scales);

/// Truncated box rule with per-axis half-widths around per-axis centers.
QuadratureRule box_rule(std::span<const int> points_per_axis, std::span<const double> centers,
                        std::span<const double> half_widths);

/// Symmetric box [-R, R]^m with the same node count on every axis.
QuadratureRule box_rule(int points_per_axis, int m, double radius);

// Defaults used across the library.
inline constexpr int kDefaultHermiteOrder = 64;
inline constexpr int kDefaultBoxPoints = 160;
inline constexpr double kDefaultBoxRadius = 10.0;

/// Lebesgue integral of g (g(point) -> cplx) with the rule's dx weights.
template <typename Fn>
cplx integrate(const QuadratureRule& rule, Fn&& g);

/// Lebesgue integral of exp(h), h(point) -> cplx, accumulated in the log
/// domain so large kernel factors and small weights never meet as doubles.
template <typename Fn>
cplx integrate_exp(const QuadratureRule& rule, Fn&& h);

template <typename Fn>
void QuadratureRule::for_each_node(Fn&& fn) const {
  const int m = dim();
  std::array<std::size_t, 2 * kMaxDimension> idx{};
  std::array<double, 2 * kMaxDimension> point{};
  const std::span<const double> pt(point.data(), static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    if (axes_[k].nodes.empty()) return;
  }
  while (true) {
    double w = 1.0;
    double lw = 0.0;
    for (int k = 0; k < m; ++k) {
      const Rule1D& ax = axes_[k];
      point[k] = ax.nodes[idx[k]];
      w *= ax.weights[idx[k]];
      lw += ax.log_lebesgue[idx[k]];
    }
    fn(pt, w, lw);
    int k = m - 1;
    for (; k >= 0; --k) {
      if (++idx[k] < axes_[k].nodes.size()) break;
      idx[k] = 0;
    }
    if (k < 0) break;
  }
}

template <typename Fn>
cplx integrate(const QuadratureRule& rule, Fn&& g) {
  cplx sum = 0.0;
  rule.for_each_node([&](RealPoint x, double, double lw) { sum += std::exp(lw) * g(x); });
  return sum;
}

template <typename Fn>
cplx integrate_exp(const QuadratureRule& rule, Fn&& h) {
  cplx sum = 0.0;
  rule.for_each_node([&](RealPoint x, double, double lw) { sum += std::exp(h(x) + lw); });
  return sum;
}

}  // namespace bargmann
