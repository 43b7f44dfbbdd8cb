#include "bargmann/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "bargmann/errors.hpp"
#include "bargmann/transform.hpp"

namespace bargmann {

struct SigmaCache {
  std::map<double, double> inv_sqrt_sigma;
};

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

void require_d1(int d, const char* what) {
  if (d != 1) throw UnsupportedError(std::string(what) + " is implemented for d = 1 only");
}

// Interval [lo, hi] around 0 outside which the concave log-magnitude g stays
// `margin` e-folds below its maximum. Endpoints are rounded out to multiples of 2
// so that repeated boxes share nodes.
std::pair<double, double> spectral_box(const std::function<double(double)>& g, double margin) {
  constexpr double step = 0.25;
  constexpr double limit = 1e4;
  double peak = g(0.0);
  auto scan = [&](double dir) {
    double k = 0.0;
    int below = 0;
    while (below < 3) {
      k += dir * step;
      if (std::abs(k) > limit) throw ConvergenceError("spectral integrand does not decay");
      const double v = g(k);
      if (v > peak) peak = v;
      below = v <= peak - margin ? below + 1 : 0;
    }
    return k;
  };
  double hi = scan(1.0);
  double lo = scan(-1.0);
  // the peak may have risen while scanning the second side
  while (g(hi) > peak - margin) hi += 2.0;
  while (g(lo) > peak - margin) lo -= 2.0;
  return {2.0 * std::floor(lo / 2.0), 2.0 * std::ceil(hi / 2.0)};
}

Rule1D spectral_rule(double lo, double hi, double nodes_per_unit) {
  const int points = 8 * std::max(1, static_cast<int>(std::ceil((hi - lo) * nodes_per_unit / 8.0)));
  return composite_legendre_1d(points, lo, hi);
}

}  // namespace

DecayProfile DecayProfile::gaussian(int d) {
  if (d < 1 || d > kMaxDimension) throw ArgumentError("dimension must be 1, 2 or 3");
  DecayProfile p;
  p.dim_ = d;
  p.name_ = "gaussian";
  p.tail_power_ = 2.0;
  p.log_norm_ = -0.5 * d * std::log(kPi);
  return p;
}

DecayProfile DecayProfile::quartic() {
  DecayProfile p;
  p.dim_ = 1;
  p.name_ = "quartic";
  p.tail_power_ = 4.0;
  p.log_norm_ = -std::log(2.0 * std::tgamma(1.25));
  return p;
}

double DecayProfile::log_nu(RealPoint b) const {
  if (static_cast<int>(b.size()) != dim_) throw ArgumentError("profile point has the wrong dimension");
  double s = log_norm_;
  for (double v : b) s -= std::pow(std::abs(v), tail_power_);
  return s;
}

std::optional<double> DecayProfile::log_sigma_closed(RealPoint k) const {
  if (tail_power_ != 2.0) return std::nullopt;
  return norm_square(k);
}

QuadratureRule sigma_rule(const DecayProfile& nu, RealPoint k, double half_width) {
  if (static_cast<int>(k.size()) != nu.dim()) throw ArgumentError("k has the wrong dimension");
  if (!(half_width > 0.0)) throw ArgumentError("half width must be positive");
  const double q = nu.tail_power();
  std::vector<double> centers(k.size());
  std::vector<double> halves(k.size(), half_width);
  std::vector<int> points(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    // peak of 2 k b - |b|^q and the curvature there
    const double peak = std::copysign(std::pow(2.0 * std::abs(k[i]) / q, 1.0 / (q - 1.0)), k[i]);
    const double curvature = q * (q - 1.0) * std::pow(std::abs(peak), q - 2.0);
    const double panel = std::min(0.5, 1.0 / std::sqrt(std::max(curvature, 1e-12)));
    centers[i] = peak;
    points[i] = 8 * static_cast<int>(std::ceil(2.0 * half_width / panel));
  }
  return box_rule(points, centers, halves);
}

double log_sigma_of_nu(const DecayProfile& nu, RealPoint k, const QuadratureRule& rule) {
  if (rule.dim() != nu.dim()) throw ArgumentError("sigma rule has the wrong dimension");
  std::vector<double> terms;
  terms.reserve(rule.size());
  rule.for_each_node([&](RealPoint b, double, double lw) {
    double tilt = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) tilt += 2.0 * k[i] * b[i];
    terms.push_back(lw + tilt + nu.log_nu(b));
  });
  const double out = log_sum_exp(terms);
  if (!std::isfinite(out)) throw DivergenceError("sigma(k) is not finite");
  return out;
}

double sigma_of_nu(const DecayProfile& nu, RealPoint k, const QuadratureRule& rule) {
  return std::exp(log_sigma_of_nu(nu, k, rule));
}

double log_sigma_of_nu(const DecayProfile& nu, RealPoint k) {
  if (!(nu.tail_power() > 1.0)) throw DivergenceError("profile does not admit exponential tilts");
  return log_sigma_of_nu(nu, k, sigma_rule(nu, k));
}

double sigma_of_nu(const DecayProfile& nu, RealPoint k) { return std::exp(log_sigma_of_nu(nu, k)); }

// ---- windows --------------------------------------------------------------

Window Window::gaussian(int d, cplx amplitude, std::vector<double> beta) {
  if (d < 1 || d > kMaxDimension) throw ArgumentError("dimension must be 1, 2 or 3");
  if (beta.empty()) beta.assign(d, 0.0);
  if (static_cast<int>(beta.size()) != d) throw ArgumentError("beta has the wrong dimension");
  Window w;
  w.dim_ = d;
  w.kind_ = WindowKind::gaussian;
  w.amplitude_ = amplitude;
  w.beta_ = std::move(beta);
  return w;
}

Window Window::standard_gaussian(int d) {
  return gaussian(d, std::pow(2.0 * kPi, -0.5 * d));
}

Window Window::from_nu(DecayProfile profile, SpectralOptions opts) {
  require_d1(profile.dim(), "window from a decay profile");
  if (!(opts.nodes_per_unit > 0.0 && opts.margin > 0.0 && opts.tolerance > 0.0)) {
    throw ArgumentError("spectral options must be positive");
  }
  Window w;
  w.dim_ = 1;
  w.kind_ = WindowKind::from_nu;
  w.profile_ = std::move(profile);
  w.options_ = opts;
  w.cache_ = std::make_shared<SigmaCache>();
  return w;
}

std::string Window::describe() const {
  if (kind_ == WindowKind::from_nu) return "from_nu(" + profile_->name() + ")";
  std::string b;
  for (std::size_t i = 0; i < beta_.size(); ++i) b += fmt::format("{}{:g}", i ? "," : "", beta_[i]);
  return fmt::format("gaussian(amp={:g}{:+g}i, beta=({}))", amplitude_.real(), amplitude_.imag(), b);
}

double Window::inv_sqrt_sigma(double k) const {
  if (kind_ != WindowKind::from_nu) throw ArgumentError("only profile windows carry sigma");
  auto it = cache_->inv_sqrt_sigma.find(k);
  if (it != cache_->inv_sqrt_sigma.end()) return it->second;
  const double kk[1] = {k};
  const auto closed = profile_->log_sigma_closed(kk);
  const double v = std::exp(-0.5 * (closed ? *closed : log_sigma_of_nu(*profile_, kk)));
  cache_->inv_sqrt_sigma.emplace(k, v);
  return v;
}

namespace {

double log_inv_sqrt_sigma(const Window& w, double k) {
  const double v = w.inv_sqrt_sigma(k);
  return v > 0.0 ? std::log(v) : kNegInf;
}

// (1/2pi) integral over [lo, hi] of e^{-ikz} amp(k) dk, with the sum of moduli.
std::pair<cplx, double> spectral_sum(const Window& w, cplx z, double lo, double hi,
                                     const std::function<cplx(double)>& amp) {
  const Rule1D r = spectral_rule(lo, hi, w.options().nodes_per_unit);
  cplx sum = 0.0;
  double mass = 0.0;
  for (std::size_t j = 0; j < r.nodes.size(); ++j) {
    const double k = r.nodes[j];
    const cplx term = std::exp(r.log_lebesgue[j] - cplx(0.0, 1.0) * k * z) * amp(k);
    sum += term;
    mass += std::abs(term);
  }
  return {sum / (2.0 * kPi), mass / (2.0 * kPi)};
}

cplx checked_spectral(const Window& w, cplx z, const std::function<double(double)>& log_mag,
                      const std::function<cplx(double)>& amp) {
  const auto [lo, hi] = spectral_box(log_mag, w.options().margin);
  const auto small = spectral_sum(w, z, lo, hi, amp);
  const auto large = spectral_sum(w, z, 1.25 * lo, 1.25 * hi, amp);
  const double err = std::abs(large.first - small.first);
  if (err > w.options().tolerance * std::max(large.second, 1e-300)) {
    throw ConvergenceError(fmt::format("spectral integral at z = {:g}{:+g}i: box change {:.3e}",
                                       z.real(), z.imag(), err));
  }
  return large.first;
}

cplx from_nu_phi(const Window& w, cplx z) {
  const double y = z.imag();
  return checked_spectral(
      w, z, [&](double k) { return k * y + log_inv_sqrt_sigma(w, k); },
      [&](double k) { return cplx(w.inv_sqrt_sigma(k)); });
}

}  // namespace

cplx Window::operator()(ComplexPoint z) const {
  if (static_cast<int>(z.size()) != dim_) throw ArgumentError("window point has the wrong dimension");
  if (kind_ == WindowKind::from_nu) return from_nu_phi(*this, z[0]);
  cplx e = -0.5 * complex_square(z);
  for (int k = 0; k < dim_; ++k) e += cplx(0.0, beta_[k]) * z[k];
  return amplitude_ * std::exp(e);
}

cplx Window::operator()(RealPoint x) const {
  std::vector<cplx> z(x.begin(), x.end());
  return (*this)(z);
}

cplx phi_from_nu(const DecayProfile& nu, ComplexPoint z, const SpectralOptions& opts) {
  return Window::from_nu(nu, opts)(z);
}

// ---- windowed Fourier transform -----------------------------------------

namespace {

// amp e^{-a^2/2 - i beta.a} I(P, 1/2 - alpha, a + a_f + i beta + i b)
cplx windowed_closed(const GaussianPolynomial& g, const Window& w, RealPoint a, RealPoint b) {
  const int d = g.dim();
  if (!(0.5 - g.alpha > 0.0)) throw DivergenceError("windowed transform diverges: growth rate >= 1/2");
  std::vector<cplx> coeff(d);
  cplx pre = 0.0;
  for (int k = 0; k < d; ++k) {
    coeff[k] = a[k] + g.linear[k] + cplx(0.0, w.beta()[k] + b[k]);
    pre += -0.5 * a[k] * a[k] - cplx(0.0, w.beta()[k] * a[k]);
  }
  const GaussianIntegral in = gaussian_polynomial_integral(g.poly, 0.5 - g.alpha, coeff);
  return w.amplitude() * in.value * std::exp(in.log_factor + pre);
}

void check_dims(const TestFunction& f, const Window& w, std::size_t a, std::size_t b) {
  const auto d = static_cast<std::size_t>(f.dim());
  if (w.dim() != f.dim() || a != d || b != d) throw ArgumentError("dimension mismatch");
}

}  // namespace

cplx windowed_ft(const TestFunction& f, const Window& phi, RealPoint a, RealPoint b,
                 const QuadratureRule& rule) {
  check_dims(f, phi, a.size(), b.size());
  const int d = f.dim();
  if (rule.dim() != d) throw ArgumentError("rule has the wrong dimension");
  QuadratureRule r = rule;
  if (rule.scheme() == QuadratureScheme::gauss_hermite) {
    std::vector<double> c(d), s(d);
    const double alpha = f.growth().quadratic_rate;
    if (phi.kind() == WindowKind::gaussian) {
      if (!(0.5 - alpha > 0.0)) throw DivergenceError("windowed transform diverges: growth rate >= 1/2");
      const double A = 0.5 - alpha;
      for (int k = 0; k < d; ++k) {
        const double lin = f.growth().exp_rate.empty() ? 0.0 : f.growth().exp_rate[k];
        c[k] = (a[k] + lin) / (2.0 * A);
        s[k] = 1.0 / std::sqrt(A);
      }
    } else {
      for (int k = 0; k < d; ++k) {
        c[k] = a[k];
        s[k] = 1.0;
      }
    }
    r = rule.affine(c, s);
  }
  std::vector<cplx> shifted(d);
  return integrate(r, [&](RealPoint x) {
    double phase = 0.0;
    for (int k = 0; k < d; ++k) {
      shifted[k] = x[k] - a[k];
      phase += b[k] * x[k];
    }
    return f(x) * phi(ComplexPoint(shifted)) * std::exp(cplx(0.0, phase));
  });
}

cplx windowed_ft(const TestFunction& f, const Window& phi, RealPoint a, RealPoint b) {
  check_dims(f, phi, a.size(), b.size());
  if (phi.kind() == WindowKind::gaussian && f.is_closed_form()) {
    return windowed_closed(f.closed(), phi, a, b);
  }
  if (phi.kind() == WindowKind::gaussian) {
    return windowed_ft(f, phi, a, b, gauss_hermite_rule(kDefaultHermiteOrder,
                                                        std::vector<double>(f.dim(), 0.0),
                                                        std::vector<double>(f.dim(), 1.0)));
  }
  std::vector<int> pts(f.dim(), 320);
  std::vector<double> c(a.begin(), a.end());
  std::vector<double> h(f.dim(), 10.0);
  return windowed_ft(f, phi, a, b, box_rule(pts, c, h));
}

// ---- holomorphic convolution --------------------------------------------

namespace {

// amp e^{-z^2/2 + i beta.z} I(P, 1/2 - alpha, z + a_f - i beta)
cplx gaussian_convolution(const Window& w, const TestFunction& f, ComplexPoint z) {
  const int d = f.dim();
  if (f.is_closed_form()) {
    const GaussianPolynomial& g = f.closed();
    if (!(0.5 - g.alpha > 0.0)) throw DivergenceError("convolution diverges: growth rate >= 1/2");
    std::vector<cplx> coeff(d);
    cplx pre = -0.5 * complex_square(z);
    for (int k = 0; k < d; ++k) {
      coeff[k] = z[k] + g.linear[k] - cplx(0.0, w.beta()[k]);
      pre += cplx(0.0, w.beta()[k]) * z[k];
    }
    const GaussianIntegral in = gaussian_polynomial_integral(g.poly, 0.5 - g.alpha, coeff);
    return w.amplitude() * in.value * std::exp(in.log_factor + pre);
  }
  // amp (2pi)^{d/2} e^{i beta.z} S(e^{-i beta.x} f)(z)
  const std::vector<double> beta = w.beta();
  const bool twisted = std::any_of(beta.begin(), beta.end(), [](double v) { return v != 0.0; });
  cplx phase = 0.0;
  for (int k = 0; k < d; ++k) phase += cplx(0.0, beta[k]) * z[k];
  const double scale = std::pow(2.0 * kPi, 0.5 * d);
  if (!twisted) return w.amplitude() * scale * sb_transform(f, z, default_transform_rule(d));
  const TestFunction g = TestFunction::custom(
      d,
      [f, beta](RealPoint x) {
        double t = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) t += beta[k] * x[k];
        return f(x) * std::exp(cplx(0.0, -t));
      },
      f.growth(), f.name(), std::nullopt, f.smooth());
  return w.amplitude() * scale * std::exp(phase) * sb_transform(g, z, default_transform_rule(d));
}

// fhat(k) = integral e^{ikx} f(x) dx = I(P, -alpha, a_f + ik), split in log form.
GaussianIntegral fourier_closed(const GaussianPolynomial& g, double k) {
  const cplx coeff[1] = {g.linear[0] + cplx(0.0, k)};
  return gaussian_polynomial_integral(g.poly, -g.alpha, coeff);
}

}  // namespace

ConvolutionTransform::ConvolutionTransform(Window phi, TestFunction f, double y_max)
    : phi_(std::move(phi)), f_(std::move(f)), y_max_(y_max) {
  if (phi_.dim() != f_.dim()) throw ArgumentError("dimension mismatch");
  if (!(y_max_ >= 0.0)) throw ArgumentError("y_max must be non-negative");
  if (phi_.kind() == WindowKind::gaussian) return;
  if (!f_.is_closed_form()) {
    throw UnsupportedError("spectral convolution needs a closed-form test function");
  }
  const GaussianPolynomial& g = f_.closed();
  if (!(g.alpha < 0.0)) throw DivergenceError("spectral convolution needs a decaying f (alpha < 0)");
  const int deg = std::max(0, g.poly.degree());
  auto log_mag = [&](double k) {
    const GaussianIntegral in = fourier_closed(g, k);
    return std::abs(k) * y_max_ + log_inv_sqrt_sigma(phi_, k) + in.log_factor.real() +
           deg * std::log1p(std::abs(k));
  };
  const auto [lo, hi] = spectral_box(log_mag, phi_.options().margin);
  auto fill = [&](double a, double b, std::vector<double>& ks, std::vector<cplx>& vals) {
    const Rule1D r = spectral_rule(a, b, phi_.options().nodes_per_unit);
    for (std::size_t j = 0; j < r.nodes.size(); ++j) {
      const double k = r.nodes[j];
      const GaussianIntegral in = fourier_closed(g, k);
      ks.push_back(k);
      vals.push_back(std::exp(r.log_lebesgue[j] + in.log_factor) * in.value *
                     phi_.inv_sqrt_sigma(k) / (2.0 * kPi));
    }
  };
  std::vector<double> k_small;
  std::vector<cplx> v_small;
  fill(lo, hi, k_small, v_small);
  fill(1.25 * lo, 1.25 * hi, k_, spectral_);
  for (double y : {-y_max_, 0.0, y_max_}) {
    cplx a = 0.0, b = 0.0;
    double mass = 0.0;
    for (std::size_t j = 0; j < k_small.size(); ++j) a += v_small[j] * std::exp(k_small[j] * y);
    for (std::size_t j = 0; j < k_.size(); ++j) {
      const cplx t = spectral_[j] * std::exp(k_[j] * y);
      b += t;
      mass += std::abs(t);
    }
    if (std::abs(a - b) > phi_.options().tolerance * std::max(mass, 1e-300)) {
      throw ConvergenceError(fmt::format("spectral convolution box change {:.3e} at Im z = {:g}",
                                         std::abs(a - b), y));
    }
  }
}

cplx ConvolutionTransform::operator()(ComplexPoint z) const {
  if (static_cast<int>(z.size()) != f_.dim()) throw ArgumentError("point has the wrong dimension");
  if (phi_.kind() == WindowKind::gaussian) return gaussian_convolution(phi_, f_, z);
  if (std::abs(z[0].imag()) > y_max_ * (1.0 + 1e-12)) {
    throw ArgumentError(fmt::format("|Im z| = {:g} exceeds the prepared range {:g}",
                                    std::abs(z[0].imag()), y_max_));
  }
  cplx sum = 0.0;
  for (std::size_t j = 0; j < k_.size(); ++j) sum += spectral_[j] * std::exp(cplx(0.0, -k_[j]) * z[0]);
  return sum;
}

cplx ConvolutionTransform::tilde(ComplexPoint z) const {
  std::vector<double> b(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) b[k] = z[k].imag();
  const DecayProfile nu = phi_.profile() ? *phi_.profile() : DecayProfile::gaussian(f_.dim());
  return std::exp(0.5 * nu.log_nu(b)) * (*this)(z);
}

cplx holo_convolution(const Window& phi, const TestFunction& f, ComplexPoint z) {
  double y = 0.0;
  for (const cplx& v : z) y = std::max(y, std::abs(v.imag()));
  return ConvolutionTransform(phi, f, y)(z);
}

cplx holo_convolution_tilde(const Window& phi, const TestFunction& f, ComplexPoint z) {
  double y = 0.0;
  for (const cplx& v : z) y = std::max(y, std::abs(v.imag()));
  return ConvolutionTransform(phi, f, y).tilde(z);
}

CovarianceFit gaussian_covariance_check(const Window& phi, double a, double b, int points) {
  require_d1(phi.dim(), "covariance check");
  if (points < 2) throw ArgumentError("covariance fit needs at least two points");
  std::vector<cplx> g(points), h(points);
  for (int j = 0; j < points; ++j) {
    const double x = -4.0 + 8.0 * j / (points - 1);
    const cplx lhs[1] = {cplx(x - a, -b)};
    const cplx rhs[1] = {cplx(x - a, 0.0)};
    h[j] = phi(ComplexPoint(lhs));
    g[j] = phi(ComplexPoint(rhs)) * std::exp(cplx(0.0, b * x));
  }
  cplx num = 0.0;
  double den = 0.0;
  for (int j = 0; j < points; ++j) {
    num += std::conj(g[j]) * h[j];
    den += std::norm(g[j]);
  }
  CovarianceFit out;
  out.c = den > 0.0 ? num / den : cplx(0.0);
  double worst = 0.0, scale = 0.0;
  for (int j = 0; j < points; ++j) {
    worst = std::max(worst, std::abs(h[j] - out.c * g[j]));
    scale = std::max(scale, std::abs(h[j]));
  }
  out.residual = scale > 0.0 ? worst / scale : 0.0;
  out.log10_residual = std::log10(std::max(out.residual, 1e-300));
  return out;
}

}  // namespace bargmann
