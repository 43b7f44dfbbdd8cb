#include "bargmann/holo_function.hpp"

#include <algorithm>
#include <cmath>

#include "bargmann/errors.hpp"

namespace bargmann {

GrowthEnvelope GrowthEnvelope::flat(int dim, int poly_degree) {
  GrowthEnvelope e;
  e.linear_x.assign(dim, 0.0);
  e.linear_y.assign(dim, 0.0);
  e.poly_degree = poly_degree;
  return e;
}

double GrowthEnvelope::log_bound(ComplexPoint z) const {
  double s = poly_degree * std::log1p(std::sqrt(modulus_square(z)));
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double x = z[k].real();
    const double y = z[k].imag();
    s += rate_x * x * x + rate_y * y * y;
    if (k < linear_x.size()) s += linear_x[k] * x;
    if (k < linear_y.size()) s += linear_y[k] * y;
  }
  return s;
}

HoloFunction::HoloFunction(int dim, Evaluator fn, GrowthEnvelope envelope,
                           HoloProvenance provenance, std::string name)
    : dim_(dim),
      fn_(std::move(fn)),
      envelope_(std::move(envelope)),
      provenance_(provenance),
      name_(std::move(name)) {
  if (dim_ < 1 || dim_ > kMaxDimension) throw ArgumentError("dimension must be in 1..3");
  if (!fn_) throw ArgumentError("holomorphic function needs an evaluator");
  envelope_.linear_x.resize(dim_, 0.0);
  envelope_.linear_y.resize(dim_, 0.0);
}

HoloFunction HoloFunction::monomial(int dim, const Exponents& e, cplx c) {
  return polynomial(Polynomial::monomial(dim, e, c), "monomial");
}

HoloFunction HoloFunction::constant(int dim, cplx c) {
  return polynomial(Polynomial::constant(dim, c), "const");
}

HoloFunction HoloFunction::polynomial(const Polynomial& p, std::string name) {
  return HoloFunction(
      p.dim(), [p](ComplexPoint z) { return p(z); }, GrowthEnvelope::flat(p.dim(), p.degree()),
      HoloProvenance::closed_form, std::move(name));
}

HoloFunction HoloFunction::exp_quadratic(int dim, double lambda) {
  GrowthEnvelope env = GrowthEnvelope::flat(dim);
  env.rate_x = 0.5 * lambda;
  env.rate_y = -0.5 * lambda;
  return HoloFunction(
      dim, [lambda](ComplexPoint z) { return std::exp(0.5 * lambda * complex_square(z)); }, env,
      HoloProvenance::closed_form, "expquad:" + std::to_string(lambda));
}

cplx HoloFunction::operator()(ComplexPoint z) const {
  if (static_cast<int>(z.size()) != dim_) {
    throw ArgumentError("holomorphic function evaluated at a point of the wrong dimension");
  }
  return fn_(z);
}

HoloFunction HoloFunction::with_source(TestFunction f) const {
  HoloFunction out = *this;
  out.source_ = std::move(f);
  return out;
}

HoloFunction HoloFunction::renamed(std::string name) const {
  HoloFunction out = *this;
  out.name_ = std::move(name);
  return out;
}

HoloFunction HoloFunction::with_envelope(GrowthEnvelope envelope) const {
  HoloFunction out = *this;
  out.envelope_ = std::move(envelope);
  out.envelope_.linear_x.resize(dim_, 0.0);
  out.envelope_.linear_y.resize(dim_, 0.0);
  return out;
}

HoloFunction HoloFunction::scaled(cplx c) const {
  HoloFunction out = *this;
  Evaluator fn = fn_;
  out.fn_ = [fn, c](ComplexPoint z) { return c * fn(z); };
  return out;
}

HoloFunction HoloFunction::times_monomial(const Exponents& e) const {
  HoloFunction out = *this;
  const Polynomial m = Polynomial::monomial(dim_, e);
  Evaluator fn = fn_;
  out.fn_ = [fn, m](ComplexPoint z) { return m(z) * fn(z); };
  out.envelope_.poly_degree += m.degree();
  out.provenance_ = provenance_ == HoloProvenance::dilated ? HoloProvenance::closed_form : provenance_;
  out.base_.reset();
  out.name_ = "z^e*" + name_;
  return out;
}

HoloFunction HoloFunction::combine(cplx a, const HoloFunction& f, cplx b, const HoloFunction& g) {
  if (f.dim_ != g.dim_) throw ArgumentError("cannot combine functions of different dimension");
  GrowthEnvelope env = GrowthEnvelope::flat(f.dim_);
  const GrowthEnvelope& ef = f.envelope_;
  const GrowthEnvelope& eg = g.envelope_;
  env.rate_x = std::max(ef.rate_x, eg.rate_x);
  env.rate_y = std::max(ef.rate_y, eg.rate_y);
  env.poly_degree = std::max(ef.poly_degree, eg.poly_degree);
  for (int k = 0; k < f.dim_; ++k) {
    // equal quadratic rates: keep the weaker linear bound; otherwise the
    // quadratic term dominates and the linear part only shifts constants
    env.linear_x[k] = ef.rate_x == eg.rate_x ? std::max(ef.linear_x[k], eg.linear_x[k])
                      : ef.rate_x > eg.rate_x ? ef.linear_x[k]
                                              : eg.linear_x[k];
    env.linear_y[k] = ef.rate_y == eg.rate_y ? std::max(ef.linear_y[k], eg.linear_y[k])
                      : ef.rate_y > eg.rate_y ? ef.linear_y[k]
                                              : eg.linear_y[k];
  }
  const HoloProvenance prov =
      f.provenance_ == HoloProvenance::quadrature_backed || g.provenance_ == HoloProvenance::quadrature_backed
          ? HoloProvenance::quadrature_backed
          : HoloProvenance::closed_form;
  Evaluator ff = f.fn_;
  Evaluator gf = g.fn_;
  return HoloFunction(
      f.dim_, [ff, gf, a, b](ComplexPoint z) { return a * ff(z) + b * gf(z); }, env, prov,
      "comb(" + f.name_ + "," + g.name_ + ")");
}

HoloFunction make_dilated(const HoloFunction& base, double t, HoloFunction::Evaluator fn,
                          GrowthEnvelope env) {
  HoloFunction out(base.dim(), std::move(fn), std::move(env), HoloProvenance::dilated,
                   "dilate(" + base.name() + ")");
  out.base_ = std::make_shared<const HoloFunction>(base);
  out.dilation_ = t;
  return out;
}

double cauchy_riemann_residual(const HoloFunction& f, const std::vector<std::vector<cplx>>& points,
                               double h) {
  double worst = 0.0;
  for (const auto& z0 : points) {
    std::vector<cplx> z = z0;
    for (int k = 0; k < f.dim(); ++k) {
      z[k] = z0[k] + h;
      const cplx fxp = f(z);
      z[k] = z0[k] - h;
      const cplx fxm = f(z);
      z[k] = z0[k] + cplx(0.0, h);
      const cplx fyp = f(z);
      z[k] = z0[k] - cplx(0.0, h);
      const cplx fym = f(z);
      z[k] = z0[k];
      const cplx dx = (fxp - fxm) / (2.0 * h);
      const cplx dy = (fyp - fym) / (2.0 * h) / cplx(0.0, 1.0);
      const double scale = std::max({std::abs(dx), std::abs(dy), std::abs(f(z)), 1e-300});
      worst = std::max(worst, std::abs(dx - dy) / scale);
    }
  }
  return worst;
}

}  // namespace bargmann
