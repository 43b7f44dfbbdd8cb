#include "bargmann/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "bargmann/errors.hpp"
#include "bargmann/gaussian_core.hpp"
#include "bargmann/transform.hpp"

namespace bargmann {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& v) {
  double peak = kNegInf;
  for (double t : v) peak = std::max(peak, t);
  if (peak == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : v) s += std::exp(t - peak);
  return peak + std::log(s);
}

double log_abs(cplx v) {
  const double a = std::abs(v);
  return a == 0.0 ? kNegInf : std::log(a);
}

// Weight decay coefficients of w = e^{-y^2/2} e^{-x^2/2(p-1)}.
double decay_x(double p) { return 0.5 / (p - 1.0); }
constexpr double kDecayY = 0.5;

void check_image_gate(const HoloFunction& f, double p, ImageNormKind kind) {
  if (!(p > 1.0)) throw DomainError("exponent p must lie in (1, inf)");
  const GrowthEnvelope& e = f.envelope();
  bool ok;
  if (kind == ImageNormKind::Hyper) {
    ok = 2.0 * (p - 1.0) * e.rate_x < 1.0 && 2.0 * (p - 1.0) * e.rate_y < 1.0;
  } else {
    ok = e.rate_x < decay_x(p) && e.rate_y < kDecayY;
  }
  if (!ok) {
    throw DivergenceError(to_string(kind) + " image norm of " + f.name() +
                          " diverges for p = " + fmt::format("{:g}", p));
  }
}

std::vector<double> real_point(ComplexPoint z) { return to_real_coordinates(z); }

struct AxisShape {
  double a;       // Gaussian decay of the integrand along the axis
  double center;  // its peak
};

// Decay and peak of |integrand| per real axis (x axes first, then y axes).
std::vector<AxisShape> integrand_shape(const HoloFunction& f, double p, ImageNormKind kind) {
  const int d = f.dim();
  const GrowthEnvelope& e = f.envelope();
  std::vector<AxisShape> out(2 * d);
  if (kind == ImageNormKind::Hyper) {
    const double c = std::sqrt(p - 1.0);
    for (int k = 0; k < d; ++k) {
      const double ax = 1.0 - 2.0 * c * c * e.rate_x;
      const double ay = 1.0 - 2.0 * c * c * e.rate_y;
      out[k] = {ax, c * e.linear_x[k] / ax};
      out[k + d] = {ay, c * e.linear_y[k] / ay};
    }
    return out;
  }
  const double gx = decay_x(p) - e.rate_x;
  const double gy = kDecayY - e.rate_y;
  double ex = 1.0;
  double ey = 1.0;
  if (kind == ImageNormKind::LpPrime) ex = ey = conjugate_exponent(p);
  if (kind == ImageNormKind::Mixed) ex = p;
  for (int k = 0; k < d; ++k) {
    out[k] = {ex * gx, e.linear_x[k] / (2.0 * gx)};
    out[k + d] = {ey * gy, e.linear_y[k] / (2.0 * gy)};
  }
  return out;
}

bool is_even_integer(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-12 && static_cast<long>(r) % 2 == 0;
}

QuadratureRule sub_rule(const QuadratureRule& rule, int first, int count) {
  std::vector<Rule1D> axes(rule.axes().begin() + first, rule.axes().begin() + first + count);
  std::vector<double> c(rule.centers().begin() + first, rule.centers().begin() + first + count);
  std::vector<double> s(rule.scales().begin() + first, rule.scales().begin() + first + count);
  return QuadratureRule(rule.scheme(), std::move(axes), std::move(c), std::move(s), rule.radius());
}

double log_weight(double p, ComplexPoint z) {
  double s = 0.0;
  for (const cplx& v : z) s -= v.real() * v.real() * decay_x(p) + v.imag() * v.imag() * kDecayY;
  return s;
}

// Compass search from a grid maximiser, kept inside [-bound, bound]^m. Grid sups
// in 4 or 6 real dimensions are too coarse to compare across extents otherwise.
template <typename Fn>
double polish_max(Fn&& fn, std::vector<double> x, double step, double bound) {
  double best = fn(x);
  while (step > 1e-7) {
    bool moved = false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (double dir : {1.0, -1.0}) {
        const double old = x[k];
        x[k] = std::clamp(old + dir * step, -bound, bound);
        const double v = fn(x);
        if (v > best) {
          best = v;
          moved = true;
        } else {
          x[k] = old;
        }
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

}  // namespace

std::string to_string(ImageNormKind kind) {
  switch (kind) {
    case ImageNormKind::L1:
      return "L1";
    case ImageNormKind::LpPrime:
      return "LpPrime";
    case ImageNormKind::Mixed:
      return "Mixed";
    case ImageNormKind::Hyper:
      return "Hyper";
  }
  return "?";
}

double log_holder_envelope(double p, double f_norm, ComplexPoint z) {
  if (!(p > 1.0)) throw DomainError("exponent p must lie in (1, inf)");
  if (!(f_norm >= 0.0)) throw ArgumentError("norm must be non-negative");
  return (f_norm == 0.0 ? kNegInf : std::log(f_norm)) - log_weight(p, z);
}

double holder_envelope(double p, double f_norm, ComplexPoint z) {
  return std::exp(log_holder_envelope(p, f_norm, z));
}

double log_weighted_modulus(const HoloFunction& f, double p, ComplexPoint z) {
  return log_abs(f(z)) + log_weight(p, z);
}

std::vector<std::vector<cplx>> ComplexGrid::points(int d) const {
  if (n < 1) throw ArgumentError("grid needs at least one point per axis");
  auto coord = [this](double extent, int i) {
    return n == 1 ? 0.0 : -extent + 2.0 * extent * i / (n - 1);
  };
  std::vector<std::vector<cplx>> out;
  std::vector<int> idx(2 * d, 0);
  while (true) {
    std::vector<cplx> z(d);
    for (int k = 0; k < d; ++k) z[k] = cplx(coord(extent_x, idx[k]), coord(extent_y, idx[k + d]));
    out.push_back(std::move(z));
    int k = 2 * d - 1;
    for (; k >= 0; --k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

std::string ComplexGrid::describe(int d) const {
  return fmt::format("{}^{} grid |x|<={:g} |y|<={:g}", n, 2 * d, extent_x, extent_y);
}

ShellMaxima shell_maxima(const HoloFunction& f, double p, const std::vector<double>& radii,
                         int samples) {
  ShellMaxima out;
  out.radii = radii;
  const int d = f.dim();
  std::mt19937_64 gen(20240611);
  std::normal_distribution<double> normal;
  for (double r : radii) {
    double best = kNegInf;
    for (int s = 0; s < samples; ++s) {
      std::vector<cplx> z(d);
      if (d == 1) {
        const double t = 2.0 * kPi * s / samples;
        z[0] = std::polar(r, t);
      } else {
        std::vector<double> g(2 * d);
        double nrm = 0.0;
        for (double& v : g) {
          v = normal(gen);
          nrm += v * v;
        }
        nrm = std::sqrt(nrm);
        for (int k = 0; k < d; ++k) z[k] = cplx(r * g[k] / nrm, r * g[k + d] / nrm);
      }
      best = std::max(best, log_weighted_modulus(f, p, z));
    }
    out.maxima.push_back(std::exp(best));
  }
  out.strictly_decreasing = !out.maxima.empty();
  for (std::size_t i = 1; i < out.maxima.size(); ++i) {
    if (!(out.maxima[i] < out.maxima[i - 1])) out.strictly_decreasing = false;
  }
  return out;
}

CheckReport check_holder(const TestFunction& f, double p, const ComplexGrid& grid,
                         const HolderOptions& options) {
  CheckReport report("holder", options.tolerance);
  report.set_grid(grid.describe(f.dim()));
  const GaussianWeight rho(WeightKind::rho, f.dim());
  const double norm = weighted_lp_norm(f, p, rho);
  const HoloFunction sf = sb_transform_holo(f);
  double worst = 0.0;
  for (const auto& z : grid.points(f.dim())) {
    const double lhs = log_abs(sf(z));
    double rhs = std::log(norm);
    for (const cplx& v : z) {
      rhs += options.envelope_y_scale * v.imag() * v.imag() * kDecayY + v.real() * v.real() * decay_x(p);
    }
    const double residual = lhs == kNegInf ? 0.0 : std::max(0.0, lhs - rhs);
    worst = std::max(worst, residual);
    report.add_point({f.name(), p, real_point(z), residual, lhs, rhs});
  }
  CaseRecord envelope{f.name(), p, worst, true, std::nullopt, norm, "envelope; rhs = ||f||_p"};
  report.add_case(envelope);
  const ShellMaxima shells = shell_maxima(sf, p, options.shell_radii, options.shell_samples);
  std::string note = "shell maxima";
  for (std::size_t i = 0; i < shells.radii.size(); ++i) {
    note += fmt::format(" r={:g}:{:.6e}", shells.radii[i], shells.maxima[i]);
  }
  report.add_flag(f.name(), p, shells.strictly_decreasing, note);
  return report;
}

QuadratureRule image_norm_rule(const HoloFunction& f, double p, ImageNormKind kind, int order) {
  check_image_gate(f, p, kind);
  const int d = f.dim();
  const std::vector<AxisShape> shape = integrand_shape(f, p, kind);
  const bool smooth = kind == ImageNormKind::Hyper ||
                      (kind == ImageNormKind::LpPrime && is_even_integer(conjugate_exponent(p)));
  std::vector<double> centers(2 * d);
  for (int k = 0; k < 2 * d; ++k) centers[k] = shape[k].center;
  if (smooth) {
    const int n = order > 0 ? order : (d == 1 ? 64 : (d == 2 ? 24 : 10));
    std::vector<double> scales(2 * d);
    for (int k = 0; k < 2 * d; ++k) scales[k] = 1.0 / std::sqrt(shape[k].a);
    return gauss_hermite_rule(n, centers, scales);
  }
  const double power = kind == ImageNormKind::LpPrime ? conjugate_exponent(p) : std::max(1.0, p);
  const int deg = f.envelope().poly_degree;
  std::vector<int> pts(2 * d);
  std::vector<double> halves(2 * d);
  for (int k = 0; k < 2 * d; ++k) {
    const double a = shape[k].a;
    const double sigma = 1.0 / std::sqrt(2.0 * a);
    halves[k] = std::sqrt((50.0 + 4.0 * power * deg) / a);
    const double panel = sigma * (d == 1 ? 0.5 : (d == 2 ? 1.0 : 1.5));
    pts[k] = order > 0 ? order : 8 * static_cast<int>(std::ceil(2.0 * halves[k] / panel));
  }
  return box_rule(pts, centers, halves);
}

double image_norm(const HoloFunction& f, double p, ImageNormKind kind, const QuadratureRule& rule) {
  check_image_gate(f, p, kind);
  const int d = f.dim();
  if (rule.dim() != 2 * d) throw ArgumentError("image norms integrate over C^d: rule needs 2d axes");
  std::vector<cplx> z(d);
  auto set_point = [&](RealPoint node) {
    for (int k = 0; k < d; ++k) z[k] = cplx(node[k], node[k + d]);
  };
  switch (kind) {
    case ImageNormKind::L1:
    case ImageNormKind::LpPrime: {
      const double e = kind == ImageNormKind::L1 ? 1.0 : conjugate_exponent(p);
      std::vector<double> terms;
      terms.reserve(rule.size());
      rule.for_each_node([&](RealPoint node, double, double lw) {
        set_point(node);
        terms.push_back(lw + e * log_weighted_modulus(f, p, z));
      });
      return std::exp(log_sum_exp(terms) / e);
    }
    case ImageNormKind::Hyper: {
      const double c = std::sqrt(p - 1.0);
      std::vector<double> terms;
      terms.reserve(rule.size());
      rule.for_each_node([&](RealPoint node, double, double lw) {
        double r2 = 0.0;
        for (int k = 0; k < d; ++k) {
          z[k] = c * cplx(node[k], node[k + d]);
          r2 += node[k] * node[k] + node[k + d] * node[k + d];
        }
        terms.push_back(lw + 2.0 * log_abs(f(z)) - r2 - d * std::log(kPi));
      });
      return std::exp(0.5 * log_sum_exp(terms));
    }
    case ImageNormKind::Mixed: {
      const QuadratureRule xr = sub_rule(rule, 0, d);
      const QuadratureRule yr = sub_rule(rule, d, d);
      std::vector<double> outer;
      xr.for_each_node([&](RealPoint xs, double, double lwx) {
        std::vector<double> inner;
        yr.for_each_node([&](RealPoint ys, double, double lwy) {
          for (int k = 0; k < d; ++k) z[k] = cplx(xs[k], ys[k]);
          inner.push_back(lwy + log_weighted_modulus(f, p, z));
        });
        outer.push_back(lwx + p * log_sum_exp(inner));
      });
      return std::exp(log_sum_exp(outer) / p);
    }
  }
  return 0.0;
}

double image_norm(const HoloFunction& f, double p, ImageNormKind kind) {
  return image_norm(f, p, kind, image_norm_rule(f, p, kind));
}

double holo_l2_norm(const HoloFunction& f, const GaussianWeight& w, int order) {
  if (!w.complex_domain()) throw ArgumentError("holomorphic norms need a weight on C^d");
  const int d = f.dim();
  if (w.d != d) throw ArgumentError("weight and function dimensions differ");
  const GrowthEnvelope& e = f.envelope();
  std::vector<double> centers(2 * d), scales(2 * d);
  for (int k = 0; k < 2 * d; ++k) {
    const bool x_axis = k < d;
    const double a = w.decay(k) - 2.0 * (x_axis ? e.rate_x : e.rate_y);
    if (!(a > 0.0)) {
      throw DivergenceError("L^2 norm of " + f.name() + " diverges against this weight");
    }
    centers[k] = (x_axis ? e.linear_x[k] : e.linear_y[k - d]) / a;
    scales[k] = 1.0 / std::sqrt(a);
  }
  const int n = order > 0 ? order : (d == 1 ? 64 : (d == 2 ? 24 : 10));
  const QuadratureRule rule = gauss_hermite_rule(n, centers, scales);
  std::vector<double> terms;
  terms.reserve(rule.size());
  rule.for_each_node([&](RealPoint node, double, double lw) {
    const std::vector<cplx> z = from_real_coordinates(node);
    terms.push_back(lw + 2.0 * log_abs(f(z)) + log_density(w, node));
  });
  return std::exp(0.5 * log_sum_exp(terms));
}

FiniteNormProbe probe_finite_norm(const HoloFunction& f, double p, ImageNormKind kind,
                                  int points_small) {
  const int d = f.dim();
  const int n = points_small > 0 ? points_small : (d == 1 ? 256 : (d == 2 ? 64 : 16));
  const int n_large = (3 * n + 1) / 2;
  FiniteNormProbe out;
  if (d == 1 || points_small > 0) {
    out.small = image_norm(f, p, kind, box_rule(n, 2 * d, 8.0));
    out.large = image_norm(f, p, kind, box_rule(n_large, 2 * d, 12.0));
  } else {
    // Uniform boxes cannot resolve the peak at 4 or 6 real dimensions: centre on
    // it, truncate the small box near e^{-50} (d = 2) or e^{-9} (d = 3, only 8
    // nodes per axis) and widen by half for the large one.
    check_image_gate(f, p, kind);
    const std::vector<AxisShape> shape = integrand_shape(f, p, kind);
    const double deg = f.envelope().poly_degree;
    const double depth = d == 2 ? 50.0 : 9.0;
    std::vector<double> c(2 * d), hs(2 * d), hl(2 * d);
    for (int k = 0; k < 2 * d; ++k) {
      c[k] = shape[k].center;
      hs[k] = std::min(8.0, std::sqrt((depth + 4.0 * deg) / shape[k].a));
      hl[k] = 1.5 * hs[k];
    }
    out.small = image_norm(f, p, kind, box_rule(std::vector<int>(2 * d, n / 2), c, hs));
    out.large = image_norm(f, p, kind, box_rule(std::vector<int>(2 * d, 3 * n / 4), c, hl));
  }
  out.change = std::abs(out.large - out.small) / std::max(std::abs(out.small), 1e-300);
  out.finite = std::isfinite(out.large) && out.change <= 0.02;
  return out;
}

CheckReport hyper_check(const TestFunction& f, double p, const QuadratureRule& rule,
                        double tolerance) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("forward hypercontractivity needs p in (1, 2]");
  CheckReport report("hyper", tolerance);
  report.set_grid(rule.describe());
  const HoloFunction sf = sb_transform_holo(f);
  const double lhs = image_norm(sf, p, ImageNormKind::Hyper, rule);
  const GaussianWeight rho(WeightKind::rho, f.dim());
  const double rhs = weighted_lp_norm(f, p, rho);
  const double residual = std::max(0.0, lhs / rhs - 1.0);
  report.add_case({f.name(), p, residual, true, lhs, rhs,
                   fmt::format("margin={:.6e}", rhs - lhs)});
  return report;
}

CheckReport hyper_check(const TestFunction& f, double p, double tolerance) {
  const HoloFunction sf = sb_transform_holo(f);
  return hyper_check(f, p, image_norm_rule(sf, p, ImageNormKind::Hyper), tolerance);
}

GrowthClass inverse_growth(const GrowthEnvelope& env, int d) {
  GrowthClass g;
  if (!(1.0 + 2.0 * env.rate_x > 0.0)) throw DomainError("envelope decays too fast to be a transform");
  g.quadratic_rate = env.rate_x / (1.0 + 2.0 * env.rate_x);
  g.exp_rate.resize(d);
  for (int k = 0; k < d; ++k) g.exp_rate[k] = env.linear_x[k] * (1.0 - 2.0 * g.quadratic_rate);
  g.poly_degree = env.poly_degree;
  return g;
}

HyperReconstruction hyper_reconstruct(const HoloFunction& f, double p, const InversionConfig& cfg,
                                      double tolerance) {
  if (!(p >= 2.0)) throw DomainError("reverse hypercontractivity needs p >= 2");
  if (cfg.p != p || cfg.d != f.dim()) throw ArgumentError("inversion config does not match p or d");
  const double bound = image_norm(f, p, ImageNormKind::Hyper);
  TestFunction g = TestFunction::custom(
      f.dim(), [f, cfg](RealPoint x) { return adjoint_inverse(f, cfg, x); },
      inverse_growth(f.envelope(), f.dim()), "S*[" + f.name() + "]");
  const GaussianWeight rho(WeightKind::rho, f.dim());
  const double norm = weighted_lp_norm(g, p, rho);
  CheckReport report("hyper", tolerance);
  report.set_grid("adjoint inversion; " + std::string(cfg.scheme == QuadratureScheme::gauss_hermite
                                                          ? "gauss_hermite"
                                                          : "truncated_box"));
  report.add_case({f.name(), p, std::max(0.0, norm / bound - 1.0), true, norm, bound,
                   fmt::format("reverse; margin={:.6e}", bound - norm)});
  return {std::move(g), bound, norm, std::move(report)};
}

std::string to_string(SchwartzTrend trend) {
  switch (trend) {
    case SchwartzTrend::stable:
      return "stable";
    case SchwartzTrend::divergent:
      return "divergent";
    case SchwartzTrend::inconclusive:
      return "inconclusive";
  }
  return "?";
}

SchwartzConstants schwartz_constants(const HoloFunction& f, double p, int n_max,
                                     const SchwartzGrid& grid) {
  if (n_max < 0) throw ArgumentError("n_max must be non-negative");
  if (!(grid.extent_large > grid.extent_small) || !(grid.spacing > 0.0)) {
    throw ArgumentError("Schwartz grid needs extent_small < extent_large and positive spacing");
  }
  const int d = f.dim();
  auto log_constants = [&](double extent) {
    // coarse beyond d = 1; every maximum is polished afterwards
    const double h = d == 1 ? grid.spacing : std::max(grid.spacing, extent / (d == 2 ? 16.0 : 6.0));
    const int n = static_cast<int>(std::llround(2.0 * extent / h)) + 1;
    std::vector<double> best(n_max + 1, kNegInf);
    std::vector<std::vector<cplx>> arg(n_max + 1);
    auto value = [&](const std::vector<cplx>& z, int m) {
      double xs = 0.0, ys = 0.0;
      for (const cplx& v : z) {
        xs += v.real() * v.real();
        ys += v.imag() * v.imag();
      }
      return log_weighted_modulus(f, p, z) + m * (std::log1p(std::sqrt(xs)) + std::log1p(std::sqrt(ys)));
    };
    ComplexGrid g{extent, extent, n};
    for (const auto& z : g.points(d)) {
      double xs = 0.0, ys = 0.0;
      for (const cplx& v : z) {
        xs += v.real() * v.real();
        ys += v.imag() * v.imag();
      }
      const double base = log_weighted_modulus(f, p, z);
      const double poly = std::log1p(std::sqrt(xs)) + std::log1p(std::sqrt(ys));
      for (int m = 0; m <= n_max; ++m) {
        if (base + m * poly > best[m]) {
          best[m] = base + m * poly;
          arg[m] = z;
        }
      }
    }
    for (int m = 0; m <= n_max; ++m) {
      if (arg[m].empty()) continue;
      const double refined = polish_max(
          [&](const std::vector<double>& r) { return value(from_real_coordinates(r), m); },
          to_real_coordinates(arg[m]), 0.5 * h, extent);
      best[m] = std::max(best[m], refined);
    }
    return best;
  };
  const std::vector<double> small = log_constants(grid.extent_small);
  const std::vector<double> large = log_constants(grid.extent_large);
  SchwartzConstants out;
  for (int m = 0; m <= n_max; ++m) {
    out.small.push_back(std::exp(small[m]));
    out.large.push_back(std::exp(large[m]));
    const double ratio = std::exp(large[m] - small[m]);
    out.ratio.push_back(ratio);
    if (std::abs(ratio - 1.0) <= 0.01) {
      out.trend.push_back(SchwartzTrend::stable);
    } else if (ratio > 2.0) {
      out.trend.push_back(SchwartzTrend::divergent);
    } else {
      out.trend.push_back(SchwartzTrend::inconclusive);
    }
  }
  return out;
}

TestFunction creation_apply(const TestFunction& f, int k) {
  if (k < 0 || k >= f.dim()) throw ArgumentError("creation axis out of range");
  const std::string name = fmt::format("creation{}[{}]", k + 1, f.name());
  if (f.is_closed_form()) {
    GaussianPolynomial g = f.closed();
    GaussianPolynomial out = g.times_coordinate(k);
    out.poly -= g.derivative(k).poly;
    return TestFunction::poly_gaussian(std::move(out), name);
  }
  if (!f.smooth()) throw UnsupportedError("creation operator needs a differentiable function");
  GrowthClass growth = f.growth();
  growth.poly_degree += 1;
  return TestFunction::custom(
      f.dim(),
      [f, k](RealPoint x) {
        constexpr double h = 1e-5;
        std::vector<double> xp(x.begin(), x.end()), xm(x.begin(), x.end());
        xp[k] += h;
        xm[k] -= h;
        return x[k] * f(x) - (f(xp) - f(xm)) / (2.0 * h);
      },
      growth, name);
}

namespace {

std::vector<Exponents> multi_indices(int d, int cap) {
  std::vector<Exponents> out;
  for (int a = 0; a <= cap; ++a) {
    for (int b = 0; b <= (d > 1 ? cap - a : 0); ++b) {
      for (int c = 0; c <= (d > 2 ? cap - a - b : 0); ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

// Smallest E >= 8 with gap E^2 >= slope log(1 + E) + margin.
double tail_extent(double gap, double slope, double margin) {
  double e = 8.0;
  while (gap * e * e < slope * std::log1p(e) + margin) {
    e += 0.5;
    if (e > 1e4) throw ConvergenceError("tail extent does not converge");
  }
  return e;
}

std::string index_label(const Exponents& a, int d) {
  if (d == 1) return std::to_string(a[0]);
  std::string s = "(";
  for (int k = 0; k < d; ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + ")";
}

}  // namespace

CheckReport schwartz_membership_suite(const TestFunction& f, double p, int cap) {
  if (cap < 0) throw ArgumentError("multi-index cap must be non-negative");
  const int d = f.dim();
  // residual = worst of (norm change / 2%, ratio change / 1%); pass iff <= 1
  CheckReport report("schwartz", 1.0);
  report.set_grid("adaptive boxes from growth metadata; refinement x1.5");
  const GaussianPolynomial& base = f.closed();
  const GaussianWeight rho(WeightKind::rho, d);
  const double alpha = base.alpha;
  const double norm_gap = 0.5 - p * alpha;
  const double ratio_gap = 0.5 / p - alpha;
  for (const Exponents& a : multi_indices(d, cap)) {
    for (const Exponents& b : multi_indices(d, cap)) {
      const TestFunction g = moment_derivative(f, a, b);
      const std::string label =
          fmt::format("x^{} D^{} {}", index_label(a, d), index_label(b, d), f.name());
      if (g.closed().poly.is_zero()) {
        report.add_case({label, p, 0.0, true, 0.0, 0.0, "identically zero"});
        continue;
      }
      if (!(norm_gap > 0.0) || !(ratio_gap > 0.0)) {
        report.add_case({label, p, std::numeric_limits<double>::infinity(), false, std::nullopt,
                         std::nullopt, "growth rate at or above the L^p(rho) gate"});
        continue;
      }
      const int m = g.closed().poly.degree();
      // L^p(rho) norm on an adapted box and on a 1.5x larger, 1.5x denser one
      std::vector<double> centers(d);
      double shift = 0.0;
      for (int k = 0; k < d; ++k) {
        centers[k] = p * base.linear[k].real() / (2.0 * norm_gap);
        shift = std::max(shift, std::abs(centers[k]));
      }
      const double e1 = tail_extent(norm_gap, 2.0 * p * m, 40.0 + norm_gap * shift * shift);
      const double sigma = 1.0 / std::sqrt(2.0 * norm_gap);
      const double panel = sigma * (d == 1 ? 0.5 : (d == 2 ? 1.0 : 3.0));
      const int n1 = 8 * static_cast<int>(std::ceil(2.0 * e1 / panel));
      const int n2 = 8 * static_cast<int>(std::ceil(1.5 * 1.5 * 2.0 * e1 / panel));
      const std::vector<int> p1(d, n1), p2(d, n2);
      const std::vector<double> h1(d, e1), h2(d, 1.5 * e1);
      const double norm1 = weighted_lp_norm(g, p, rho, box_rule(p1, centers, h1));
      const double norm2 = weighted_lp_norm(g, p, rho, box_rule(p2, centers, h2));
      const double norm_change = std::abs(norm2 / norm1 - 1.0);
      // sup |g| e^{-x^2/2p} on two grids
      double rshift = 0.0;
      for (int k = 0; k < d; ++k) {
        rshift = std::max(rshift, std::abs(base.linear[k].real()) / (2.0 * ratio_gap));
      }
      const double r1 = tail_extent(ratio_gap, 2.0 * m, 20.0) + rshift;
      auto grid_max = [&](double extent) {
        const double h = d == 1 ? 0.05 : extent / 20.0;
        const int n = static_cast<int>(std::ceil(2.0 * extent / h)) + 1;
        std::vector<int> idx(d, 0);
        auto value = [&](const std::vector<double>& x) {
          return g.log_value(x).real() - norm_square(x) / (2.0 * p);
        };
        double best = kNegInf;
        std::vector<double> x(d), arg;
        while (true) {
          for (int k = 0; k < d; ++k) x[k] = -extent + 2.0 * extent * idx[k] / (n - 1);
          if (const double v = value(x); v > best) {
            best = v;
            arg = x;
          }
          int k = d - 1;
          for (; k >= 0; --k) {
            if (++idx[k] < n) break;
            idx[k] = 0;
          }
          if (k < 0) break;
        }
        return arg.empty() ? best : std::max(best, polish_max(value, arg, 0.5 * h, extent));
      };
      const double c1 = grid_max(r1);
      const double c2 = grid_max(1.5 * r1);
      const double ratio_change = std::abs(std::exp(c2 - c1) - 1.0);
      const double residual = std::max(norm_change / 0.02, ratio_change / 0.01);
      report.add_case({label, p, residual, true, norm1, std::exp(c1),
                       fmt::format("lhs = L^p norm (change {:.2e}); rhs = c_ab (change {:.2e})",
                                   norm_change, ratio_change)});
    }
  }
  return report;
}

}  // namespace bargmann
