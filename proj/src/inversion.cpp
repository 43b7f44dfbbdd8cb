#include "bargmann/inversion.hpp"

#include <algorithm>
#include <cmath>

#include "bargmann/errors.hpp"
#include "bargmann/transform.hpp"

namespace bargmann {

double inversion_constant(double p, int d) {
  if (!(p > 1.0)) throw DomainError("exponent p must lie in (1, inf)");
  return std::pow(p / (2.0 * kPi * kPi * (p - 1.0)), 0.5 * d);
}

double stability_constant(double p, int d) {
  return inversion_constant(p, d) * std::pow(p - 1.0, -0.5 * d / p);
}

InversionConfig InversionConfig::standard(double p, int d) {
  InversionConfig cfg;
  cfg.p = p;
  cfg.d = d;
  cfg.validate();
  return cfg;
}

InversionConfig InversionConfig::nested(double p, int d, int order) {
  InversionConfig cfg = standard(p, d);
  cfg.scheme = QuadratureScheme::gauss_hermite;
  cfg.order = order;
  cfg.validate();
  return cfg;
}

double InversionConfig::default_radius(RealPoint x) const {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return std::max(10.0, conjugate_exponent(p) * m + 8.0);
}

void InversionConfig::validate() const {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("exponent p must lie in (1, inf)");
  if (d < 1 || d > kMaxDimension) throw ArgumentError("dimension must be in 1..3");
  if (radius && !(*radius > 0.0)) throw ArgumentError("truncation radius must be positive");
  if (order != 0 && order < 2) throw ArgumentError("inversion order must be at least 2");
}

namespace {

struct AxisRules {
  Rule1D xt;
  Rule1D yt;
};

struct Peak {
  double ax, cx, ay, cy;
};

void check_gate(const HoloFunction& f, const InversionConfig& cfg) {
  cfg.validate();
  if (f.dim() != cfg.d) throw ArgumentError("function and inversion dimensions differ");
  const GrowthEnvelope& e = f.envelope();
  if (!(e.rate_x < 0.5 / (cfg.p - 1.0)) || !(e.rate_y < 0.5)) {
    throw DivergenceError("L1 image norm of " + f.name() + " is infinite for p = " +
                          std::to_string(cfg.p));
  }
}

// Gaussian envelope of |integrand| along axis k at the point x.
Peak integrand_peak(const HoloFunction& f, const InversionConfig& cfg, RealPoint x, int k) {
  const GrowthEnvelope& e = f.envelope();
  Peak pk{};
  pk.ax = 0.5 + 1.0 / (cfg.p - 1.0) - e.rate_x;
  pk.cx = (x[k] + e.linear_x[k]) / (2.0 * pk.ax);
  pk.ay = 0.5 - e.rate_y;
  pk.cy = e.linear_y[k] / (2.0 * pk.ay);
  return pk;
}

bool box_truncates(const HoloFunction& f, const InversionConfig& cfg, RealPoint x, double r) {
  if (r < cfg.default_radius(x) - 1e-12) return true;
  for (int k = 0; k < cfg.d; ++k) {
    const Peak pk = integrand_peak(f, cfg, x, k);
    if (std::abs(pk.cx) + 8.0 / std::sqrt(2.0 * pk.ax) > r) return true;
    if (std::abs(pk.cy) + 8.0 / std::sqrt(2.0 * pk.ay) > r) return true;
  }
  return false;
}

int box_points(const InversionConfig& cfg, double r) {
  if (cfg.order > 0) return cfg.order;
  return 8 * static_cast<int>(std::ceil(2.0 * r));
}

Rule1D scaled_hermite(const Rule1D& ref, double center, double a) {
  const double s = 1.0 / std::sqrt(a);
  Rule1D out = ref;
  for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
    out.nodes[i] = center + s * ref.nodes[i];
    out.log_lebesgue[i] = ref.log_lebesgue[i] + std::log(s);
    out.weights[i] = ref.weights[i] * s;
  }
  return out;
}

// Tensor sum  sum_nodes prod_k T_k(node_k) F(node)  over pairs (x~_k, y~_k).
class KernelSum {
 public:
  KernelSum(const HoloFunction& f, std::vector<AxisRules> axes, bool cache)
      : f_(f), axes_(std::move(axes)) {
    for (const AxisRules& a : axes_) sizes_.push_back(a.xt.nodes.size() * a.yt.nodes.size());
    if (cache) {
      std::size_t total = 1;
      for (std::size_t m : sizes_) total *= m;
      samples_.reserve(total);
      std::vector<cplx> z(axes_.size());
      fill(0, z);
    }
  }

  std::size_t nodes() const {
    std::size_t total = 1;
    for (std::size_t m : sizes_) total *= m;
    return total;
  }

  // value of the inversion integral; deriv_axis >= 0 inserts the
  // (-x~_k/(p-1) - i y~_k) factor on that axis
  cplx evaluate(RealPoint x, double p, double c_inv, int deriv_axis) const {
    const int d = static_cast<int>(axes_.size());
    std::vector<std::vector<cplx>> tables(d);
    const double log_c = std::log(c_inv) / d;
    for (int k = 0; k < d; ++k) {
      const Rule1D& xr = axes_[k].xt;
      const Rule1D& yr = axes_[k].yt;
      auto& t = tables[k];
      t.resize(sizes_[k]);
      std::size_t q = 0;
      for (std::size_t i = 0; i < xr.nodes.size(); ++i) {
        const double xt = xr.nodes[i];
        const double u = xt - x[k];
        const double base = xr.log_lebesgue[i] + log_c + x[k] * x[k] / p - 0.5 * u * u -
                            xt * xt / (p - 1.0);
        for (std::size_t j = 0; j < yr.nodes.size(); ++j, ++q) {
          const double yt = yr.nodes[j];
          cplx v = std::exp(cplx(base + yr.log_lebesgue[j] - 0.5 * yt * yt, yt * u));
          if (k == deriv_axis) v *= cplx(-xt / (p - 1.0), -yt);
          t[q] = v;
        }
      }
    }
    std::vector<cplx> z(d);
    return contract(tables, 0, 0, z);
  }

 private:
  cplx node_point(int k, std::size_t q) const {
    const std::size_t ny = axes_[k].yt.nodes.size();
    return cplx(axes_[k].xt.nodes[q / ny], axes_[k].yt.nodes[q % ny]);
  }

  void fill(int level, std::vector<cplx>& z) {
    const int d = static_cast<int>(axes_.size());
    for (std::size_t q = 0; q < sizes_[level]; ++q) {
      z[level] = node_point(level, q);
      if (level + 1 == d) {
        samples_.push_back(f_(z));
      } else {
        fill(level + 1, z);
      }
    }
  }

  cplx contract(const std::vector<std::vector<cplx>>& tables, int level, std::size_t offset,
                std::vector<cplx>& z) const {
    const int d = static_cast<int>(axes_.size());
    const auto& t = tables[level];
    cplx sum = 0.0;
    if (level + 1 == d) {
      if (!samples_.empty()) {
        const cplx* s = samples_.data() + offset * sizes_[level];
        for (std::size_t q = 0; q < sizes_[level]; ++q) sum += t[q] * s[q];
      } else {
        for (std::size_t q = 0; q < sizes_[level]; ++q) {
          if (t[q] == 0.0) continue;
          z[level] = node_point(level, q);
          sum += t[q] * f_(z);
        }
      }
      return sum;
    }
    for (std::size_t q = 0; q < sizes_[level]; ++q) {
      if (t[q] == 0.0) continue;
      z[level] = node_point(level, q);
      sum += t[q] * contract(tables, level + 1, offset * sizes_[level] + q, z);
    }
    return sum;
  }

  const HoloFunction& f_;
  std::vector<AxisRules> axes_;
  std::vector<std::size_t> sizes_;
  std::vector<cplx> samples_;
};

constexpr std::size_t kCacheLimit = std::size_t{1} << 23;

std::vector<AxisRules> box_axes(int d, int n, double r) {
  const Rule1D ax = composite_legendre_1d(n, -r, r);
  return std::vector<AxisRules>(d, AxisRules{ax, ax});
}

std::vector<AxisRules> hermite_axes(const HoloFunction& f, const InversionConfig& cfg,
                                    RealPoint x) {
  const Rule1D ref = gauss_hermite_1d(cfg.order > 0 ? cfg.order : 48);
  std::vector<AxisRules> axes;
  for (int k = 0; k < cfg.d; ++k) {
    const Peak pk = integrand_peak(f, cfg, x, k);
    axes.push_back({scaled_hermite(ref, pk.cx, pk.ax), scaled_hermite(ref, pk.cy, pk.ay)});
  }
  return axes;
}

void check_point(const InversionConfig& cfg, RealPoint x) {
  if (static_cast<int>(x.size()) != cfg.d) throw ArgumentError("inversion point dimension mismatch");
}

struct Evaluation {
  InversionResult result;
  cplx derivative_integral;
};

Evaluation evaluate_at(const HoloFunction& f, const InversionConfig& cfg, RealPoint x,
                       int deriv_axis) {
  check_gate(f, cfg);
  check_point(cfg, x);
  Evaluation ev{};
  if (cfg.scheme == QuadratureScheme::gauss_hermite) {
    const KernelSum sum(f, hermite_axes(f, cfg, x), false);
    ev.result.value = sum.evaluate(x, cfg.p, cfg.c_inv(), -1);
    if (deriv_axis >= 0) ev.derivative_integral = sum.evaluate(x, cfg.p, cfg.c_inv(), deriv_axis);
    ev.result.points_per_axis = cfg.order > 0 ? cfg.order : 48;
    ev.result.nodes = sum.nodes();
    return ev;
  }
  const double r = cfg.radius.value_or(cfg.default_radius(x));
  const int n = box_points(cfg, r);
  const KernelSum sum(f, box_axes(cfg.d, n, r), false);
  ev.result.value = sum.evaluate(x, cfg.p, cfg.c_inv(), -1);
  if (deriv_axis >= 0) ev.derivative_integral = sum.evaluate(x, cfg.p, cfg.c_inv(), deriv_axis);
  ev.result.radius = r;
  ev.result.points_per_axis = n;
  ev.result.nodes = sum.nodes();
  ev.result.truncation_warning = box_truncates(f, cfg, x, r);
  return ev;
}

}  // namespace

InversionResult adjoint_inverse_detailed(const HoloFunction& f, const InversionConfig& cfg,
                                         RealPoint x) {
  return evaluate_at(f, cfg, x, -1).result;
}

cplx adjoint_inverse(const HoloFunction& f, const InversionConfig& cfg, RealPoint x) {
  return adjoint_inverse_detailed(f, cfg, x).value;
}

std::vector<InversionResult> adjoint_inverse_grid(const HoloFunction& f, const InversionConfig& cfg,
                                                  const std::vector<std::vector<double>>& xs) {
  std::vector<InversionResult> out;
  if (xs.empty()) return out;
  check_gate(f, cfg);
  if (cfg.scheme == QuadratureScheme::gauss_hermite) {
    for (const auto& x : xs) out.push_back(adjoint_inverse_detailed(f, cfg, x));
    return out;
  }
  double r = 0.0;
  for (const auto& x : xs) {
    check_point(cfg, x);
    r = std::max(r, cfg.default_radius(x));
  }
  if (cfg.radius) r = *cfg.radius;
  const int n = box_points(cfg, r);
  std::size_t total = 1;
  for (int k = 0; k < 2 * cfg.d; ++k) total *= static_cast<std::size_t>(n);
  const KernelSum sum(f, box_axes(cfg.d, n, r), total <= kCacheLimit);
  for (const auto& x : xs) {
    InversionResult res;
    res.value = sum.evaluate(x, cfg.p, cfg.c_inv(), -1);
    res.radius = r;
    res.points_per_axis = n;
    res.nodes = sum.nodes();
    res.truncation_warning = box_truncates(f, cfg, x, r);
    out.push_back(res);
  }
  return out;
}

cplx transform_derivative(const HoloFunction& f, const InversionConfig& cfg, RealPoint x, int k) {
  if (k < 0 || k >= cfg.d) throw ArgumentError("derivative axis out of range");
  const Evaluation ev = evaluate_at(f, cfg, x, k);
  return ev.derivative_integral + (2.0 * x[k] / cfg.p) * ev.result.value;
}

cplx sp_adjoint(const PhaseSpaceFunction& g, double p, RealPoint x, const QuadratureRule& rule) {
  const int d = static_cast<int>(x.size());
  if (d < 1 || d > kMaxDimension) throw ArgumentError("dimension must be in 1..3");
  if (rule.dim() != 2 * d) throw ArgumentError("S_p^* integrates over C^d: rule needs 2d axes");
  const double q = (p - 1.0) / (2.0 * p);
  const double shift = p / (p - 1.0);
  const double log_c = std::log(sp_constant(p, d));
  cplx sum = 0.0;
  std::vector<cplx> z(d);
  rule.for_each_node([&](RealPoint node, double, double lw) {
    cplx e = lw + log_c;
    for (int k = 0; k < d; ++k) {
      const double xt = node[k];
      const double yt = node[k + d];
      z[k] = cplx(xt, yt);
      const double u = x[k] - shift * xt;
      e += cplx(-q * u * u, yt * (xt - x[k]));
    }
    const cplx v = g(z);
    if (v != 0.0) sum += std::exp(e) * v;
  });
  return sum;
}

}  // namespace bargmann
