#pragma once

#include <functional>

#include "bargmann/holo_function.hpp"
#include "bargmann/quadrature.hpp"
#include "bargmann/test_function.hpp"

namespace bargmann {

/// Reference rule for transforms on R^d: Gauss-Hermite, order 64, matched to rho.
/// sb_transform recenters it at the integrand peak for every z.
QuadratureRule default_transform_rule(int d, int order = kDefaultHermiteOrder);

/// Envelope of S f derived from the growth class of f.
GrowthEnvelope transform_envelope(const TestFunction& f);

/// S f(z) = e^{-z^2/2} integral e^{z.x} f(x) rho(x) dx, z^2 the complex square.
///
/// Gauss-Hermite rules are moved to the peak of |integrand|; box rules are used
/// as given. Throws DivergenceError when f grows like e^{alpha x^2}, alpha >= 1/2.
cplx sb_transform(const TestFunction& f, ComplexPoint z, const QuadratureRule& rule);

/// S f as a holomorphic function: closed form when f carries one, otherwise
/// backed by sb_transform with `rule`.
HoloFunction sb_transform_holo(const TestFunction& f, const QuadratureRule& rule);
HoloFunction sb_transform_holo(const TestFunction& f);

/// Constant of the Lebesgue-normalized transform:
/// [(2 pi)^{-1/2} (p/(p-1))^{1/4} pi^{-1/4}]^d.
double sp_constant(double p, int d);

/// S_p f(x~ + i y~) = c integral e^{-i x~.y~} e^{i x.y~}
///                    exp(-((p-1)/2p) |x - p x~/(p-1)|^2) f(x) dx.
/// f must decay (L^q(dx) gate: quadratic growth rate < 0).
cplx sp_transform(const TestFunction& f, double p, ComplexPoint z, const QuadratureRule& rule);

/// Same value through mu_{p/2}(z)^{1/2} S(rho_{p/2}^{-1/2} f)(z) in closed form.
cplx sp_transform_closed(const TestFunction& f, double p, ComplexPoint z);

/// z -> F(e^{-t} z).
HoloFunction dilate(const HoloFunction& f, double t);

/// e^{-tN} f as S^{-1}[dilate(S f, t)] with the adjoint inversion at exponent
/// inversion_p (Gauss-Hermite inversion rules, so it can be nested in norms).
TestFunction ou_semigroup(const TestFunction& f, double t, double inversion_p = 2.0);

}  // namespace bargmann
