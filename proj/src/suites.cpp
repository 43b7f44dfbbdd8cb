#include "bargmann/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "bargmann/bounds.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/gaussian_core.hpp"
#include "bargmann/inversion.hpp"
#include "bargmann/phase_space.hpp"
#include "bargmann/transform.hpp"

namespace bargmann {

namespace {

// Runs body; library errors become report errors instead of aborting the suite.
template <typename Fn>
void guarded(CheckReport& report, const std::string& label, Fn&& body) {
  try {
    body();
  } catch (const DivergenceError& e) {
    report.mark_incomplete(kGateErrorTag + label + ": " + e.what());
  } catch (const ConvergenceError& e) {
    report.mark_incomplete(kGateErrorTag + label + ": " + e.what());
  } catch (const Error& e) {
    report.mark_incomplete(kInputErrorTag + label + ": " + e.what());
  }
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<double> exponents(const std::string& suite, const RunConfig& cfg) {
  return cfg.p.empty() ? default_exponents(suite, cfg.d) : cfg.p;
}

std::vector<std::string> selectors(const std::string& suite, const RunConfig& cfg) {
  return cfg.functions.empty() ? default_functions(suite, cfg.d) : cfg.functions;
}

std::vector<std::vector<double>> cube_points(int d, double half, int n) {
  std::vector<std::vector<double>> out;
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<double> x(d);
    for (int k = 0; k < d; ++k) x[k] = n == 1 ? 0.0 : -half + 2.0 * half * idx[k] / (n - 1);
    out.push_back(std::move(x));
    int k = d - 1;
    for (; k >= 0; --k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<std::vector<int>> hermite_indices(int d) {
  const int cap = d == 1 ? 8 : (d == 2 ? 4 : 3);
  std::vector<std::vector<int>> out;
  for (int a = 0; a <= cap; ++a) {
    if (d == 1) {
      out.push_back({a});
      continue;
    }
    for (int b = 0; a + b <= cap; ++b) {
      if (d == 2) {
        out.push_back({a, b});
        continue;
      }
      for (int c = 0; a + b + c <= cap; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void isometry_suite(CheckReport& report, const RunConfig& cfg) {
  const int d = cfg.d;
  const GaussianWeight rho(WeightKind::rho, d);
  std::mt19937_64 gen(cfg.seed);
  std::normal_distribution<double> normal;
  const auto indices = hermite_indices(d);
  report.set_grid(fmt::format("Gauss-Hermite order {} on R^{}; adapted Gauss-Hermite on C^{}",
                              cfg.hermite_order, d, d));
  auto check = [&](const TestFunction& f) {
    guarded(report, f.name(), [&] {
      const double n = weighted_lp_norm(f, 2.0, rho, lp_norm_rule(f, 2.0, rho, cfg.hermite_order));
      const double h = image_norm(sb_transform_holo(f), 2.0, ImageNormKind::Hyper);
      report.add_case({f.name(), 2.0, std::abs(n * n - h * h) / (n * n), true, n * n, h * h,
                       "lhs = ||f||^2 in L^2(rho); rhs = pi^-d integral |Sf|^2 e^{-|z|^2}"});
    });
  };
  for (int t = 0; t < cfg.isometry_trials; ++t) {
    Polynomial q(d);
    for (const auto& n : indices) q += normal(gen) * Polynomial::hermite_product(n);
    check(TestFunction::polynomial(q).renamed(fmt::format("hermite-combination#{}", t + 1)));
  }
  for (const auto& s : cfg.functions) guarded(report, s, [&] { check(select_function(s, d)); });
}

void unitarity_suite(CheckReport& report, const RunConfig& cfg) {
  const int d = cfg.d;
  report.set_grid(fmt::format("Gauss-Hermite order {} on R^{}; adapted Gauss-Hermite on C^{}",
                              cfg.hermite_order, d, d));
  for (double p : exponents("unitarity", cfg)) {
    const GaussianWeight dom(WeightKind::rho_s, d, p);
    const GaussianWeight img(WeightKind::mu_s, d, p);
    for (const auto& s : selectors("unitarity", cfg)) {
      guarded(report, s, [&] {
        const TestFunction f = select_function(s, d);
        const double lhs = weighted_lp_norm(f, 2.0, dom, lp_norm_rule(f, 2.0, dom, cfg.hermite_order));
        const double rhs = holo_l2_norm(sb_transform_holo(f), img);
        report.add_case({f.name(), p, rel_diff(lhs, rhs), true, lhs, rhs,
                         "lhs = ||f||_{L^2(rho_s)}; rhs = ||Sf||_{L^2(mu_s)}"});
      });
    }
  }
}

void holder_suite(CheckReport& report, const RunConfig& cfg) {
  const int d = cfg.d;
  const ComplexGrid grid{cfg.extent_x, cfg.extent_y, cfg.effective_grid_points()};
  report.set_grid(grid.describe(d) + "; shells r = 4, 5, 6");
  HolderOptions opts;
  opts.tolerance = report.tolerance();
  opts.envelope_y_scale = cfg.holder_envelope_y_scale;
  for (double p : exponents("holder", cfg)) {
    for (const auto& s : selectors("holder", cfg)) {
      guarded(report, s, [&] {
        report.absorb(check_holder(select_function(s, d), p, grid, opts));
      });
    }
  }
  guarded(report, "tightness", [&] {
    std::vector<cplx> a(d, 0.0);
    a[0] = 1.0;
    const TestFunction f = TestFunction::exp_linear(a).renamed("explinear:1");
    const double norm = weighted_lp_norm(f, 2.0, GaussianWeight(WeightKind::rho, d));
    std::vector<cplx> z(d, 0.0);
    z[0] = 1.0;
    const double lhs = std::abs(sb_transform(f, z, default_transform_rule(d, cfg.hermite_order)));
    const double rhs = holder_envelope(2.0, norm, z);
    report.add_case({f.name(), 2.0, std::abs(std::log(lhs / rhs)), true, lhs, rhs,
                     "tightness at z = 1: |Sf(1)| against the envelope"});
  });
}

// Nested Gauss-Hermite sizes per dimension; the full tensor has order^(2d) nodes.
constexpr int kNestedOrder[] = {48, 32, 14};

}  // namespace

InversionConfig inversion_config(const RunConfig& cfg, double p) {
  InversionConfig c = cfg.inversion_uses_gauss_hermite()
                          ? InversionConfig::nested(p, cfg.d, kNestedOrder[cfg.d - 1])
                          : InversionConfig::standard(p, cfg.d);
  c.radius = cfg.inversion_radius;
  if (cfg.inversion_points > 0) c.order = cfg.inversion_points;
  return c;
}

namespace {

void roundtrip_suite(CheckReport& report, const RunConfig& cfg) {
  const int d = cfg.d;
  // d = 3 keeps to the corners of [-2,2]^3: GH14 costs ~1.5 s per point.
  const int n = d == 1 ? 25 : (d == 2 ? 3 : 2);
  const double half = d == 3 ? 2.0 : 3.0;
  const auto xs = cube_points(d, half, n);
  report.set_grid(fmt::format("{}^{} points on |x|_inf <= {:g}; inversion {}", n, d, half,
                              cfg.inversion_uses_gauss_hermite() ? "gauss_hermite" : "truncated_box"));
  for (double p : exponents("roundtrip", cfg)) {
    const InversionConfig ic = inversion_config(cfg, p);
    for (const auto& s : selectors("roundtrip", cfg)) {
      guarded(report, s, [&] {
        const TestFunction f = select_function(s, d);
        const auto res = adjoint_inverse_grid(sb_transform_holo(f), ic, xs);
        double sup = 0.0;
        std::vector<cplx> exact(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
          exact[i] = f(xs[i]);
          sup = std::max(sup, std::abs(exact[i]));
        }
        double worst = 0.0;
        int warnings = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          const double r = std::abs(res[i].value - exact[i]) / (1.0 + sup);
          worst = std::max(worst, r);
          warnings += res[i].truncation_warning ? 1 : 0;
          report.add_point({f.name(), p, xs[i], r, res[i].value.real(), exact[i].real()});
        }
        report.add_case({f.name(), p, worst, true, std::nullopt, 1.0 + sup,
                         fmt::format("sup |S*Sf - f| / (1 + sup|f|); R = {:g}, {} nodes/axis, "
                                     "{} truncation warnings",
                                     res.front().radius, res.front().points_per_axis, warnings)});
      });
    }
  }
}

void interpolation_suite(CheckReport& report, const RunConfig& cfg) {
  const int d = cfg.d;
  report.set_grid("boxes [-8,8] and [-12,12] per complex axis, 1.5x nodes");
  // Side-by-side values only; full default rules are too large beyond d = 1, and in d = 3
  // even a coarse tensor rule has ~10^7 nodes.
  const int side_order = d == 1 ? 0 : 32;
  auto norm_or_inf = [side_order, d](const HoloFunction& F, double p, ImageNormKind k) {
    if (d == 3) return std::string("not computed");
    try {
      return fmt::format("{:.10g}", image_norm(F, p, k, image_norm_rule(F, p, k, side_order)));
    } catch (const DivergenceError&) {
      return std::string("inf");
    }
  };
  for (double p : exponents("interpolation", cfg)) {
    for (const auto& s : selectors("interpolation", cfg)) {
      guarded(report, s, [&] {
        const TestFunction f = select_function(s, d);
        const HoloFunction F = sb_transform_holo(f);
        const FiniteNormProbe probe = probe_finite_norm(F, p, ImageNormKind::LpPrime);
        report.add_case({f.name(), p, probe.change, true, probe.small, probe.large,
                         fmt::format("LpPrime R=8 vs R=12; L1 = {}, Mixed = {}",
                                     norm_or_inf(F, p, ImageNormKind::L1),
                                     norm_or_inf(F, p, ImageNormKind::Mixed))});
      });
    }
    guarded(report, "gate chain", [&] {
      const TestFunction f = TestFunction::gaussian_quadratic(-0.25, d).renamed("gaussian:-0.25");
      const HoloFunction F = sb_transform_holo(f);
      const bool l1 = probe_finite_norm(F, p, ImageNormKind::L1).finite;
      const bool lp = probe_finite_norm(F, p, ImageNormKind::LpPrime).finite;
      const bool decay = shell_maxima(F, p, {4.0, 5.0, 6.0}).strictly_decreasing;
      report.add_flag(f.name(), p, (!l1 || lp) && (!lp || decay),
                      fmt::format("gate chain L1 finite {} => LpPrime finite {} => shell decay {}",
                                  l1, lp, decay));
    });
  }
}

void hyper_suite(CheckReport& report, const RunConfig& cfg) {
  const int d = cfg.d;
  report.set_grid("adapted Gauss-Hermite on C^d; reverse direction via Gauss-Hermite inversion");
  for (double p : exponents("hyper", cfg)) {
    for (const auto& s : selectors("hyper", cfg)) {
      if (p <= 2.0) {
        guarded(report, s, [&] {
          report.absorb(hyper_check(select_function(s, d), p, report.tolerance()));
        });
      }
      // p = 2 is already covered by the forward check; beyond d = 1 each reverse
      // case costs one nested inversion per norm node.
      if (p > 2.0 || (p == 2.0 && d == 1)) {
        guarded(report, s, [&] {
          const TestFunction f = select_function(s, d);
          const HoloFunction F = sb_transform_holo(f);
          try {
            image_norm_rule(F, p, ImageNormKind::Hyper);
          } catch (const DivergenceError&) {
            report.add_case({F.name(), p, 0.0, true, std::nullopt, std::nullopt,
                             "reverse; hyper norm infinite, bound vacuous"});
            return;
          }
          report.absorb(
              hyper_reconstruct(F, p, InversionConfig::nested(p, d, kNestedOrder[d - 1]), report.tolerance())
                  .report);
        });
      }
    }
  }
}

void schwartz_suite(CheckReport& report, const RunConfig& cfg) {
  const int d = cfg.d;
  const SchwartzGrid grid{cfg.schwartz_extent_small, cfg.schwartz_extent_large, cfg.schwartz_spacing};
  report.set_grid(fmt::format("C_n on extents {:g} and {:g}, spacing {:g}; residuals are "
                              "error / threshold",
                              grid.extent_small, grid.extent_large, grid.spacing));
  const auto ps = exponents("schwartz", cfg);
  for (double p : ps) {
    for (const auto& s : selectors("schwartz", cfg)) {
      guarded(report, s, [&] {
        const TestFunction f = select_function(s, d);
        const SchwartzConstants c = schwartz_constants(sb_transform_holo(f), p, cfg.schwartz_n_max, grid);
        for (int n = 0; n <= cfg.schwartz_n_max; ++n) {
          report.add_case({fmt::format("C_{} S[{}]", n, f.name()), p, std::abs(c.ratio[n] - 1.0) / 0.01,
                           true, c.small[n], c.large[n],
                           "lhs = C_n(small), rhs = C_n(large); " + to_string(c.trend[n])});
        }
        report.absorb(schwartz_membership_suite(f, p, cfg.effective_schwartz_cap()));
      });
    }
    guarded(report, "negative control", [&] {
      const HoloFunction F = HoloFunction::exp_quadratic(d, 1.0 / (p - 1.0));
      const SchwartzConstants c = schwartz_constants(F, p, std::min(cfg.schwartz_n_max, 2), grid);
      bool unstable = true;
      std::string trend;
      for (std::size_t n = 1; n < c.trend.size(); ++n) {
        unstable = unstable && c.trend[n] != SchwartzTrend::stable;
        trend += fmt::format(" C_{}:{}({:.3g})", n, to_string(c.trend[n]), c.ratio[n]);
      }
      report.add_flag(F.name(), p, unstable, "negative control, C_n must not stabilize;" + trend);
    });
  }
  // creation identity S((x_1 - d/dx_1) f)(z) = z_1 S f(z) on |z| <= 2
  const QuadratureRule rule = default_transform_rule(d, cfg.hermite_order);
  for (const auto& s : cfg.functions.empty() ? default_functions("creation", d) : cfg.functions) {
    guarded(report, s, [&] {
      const TestFunction f = select_function(s, d);
      const TestFunction g = creation_apply(f, 0);
      const HoloFunction F = sb_transform_holo(f);
      double worst = 0.0;
      for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j < 24; ++j) {
          std::vector<cplx> z(d, 0.0);
          z[0] = std::polar(0.5 * i, 2.0 * kPi * j / 24);
          if (d > 1) z[1] = cplx(0.3, -0.2);
          worst = std::max(worst, std::abs(sb_transform(g, z, rule) - z[0] * F(z)));
        }
      }
      report.add_case({"creation " + f.name(), ps.front(), worst / 1e-6, true, worst, 1e-6,
                       "max |S((x-D)f) - z Sf| on |z| <= 2 against 1e-6"});
    });
  }
}

void phase_suite(CheckReport& report, const RunConfig& cfg) {
  if (cfg.d != 1) throw UnsupportedError("the phase-space suite runs in d = 1");
  report.set_grid("20 complex points; (a,b) boxes 16 nodes per unit; residuals are error / threshold");
  const DecayProfile gauss = DecayProfile::gaussian(1);
  const DecayProfile quartic = DecayProfile::quartic();
  guarded(report, "sigma", [&] {
    const double k1[1] = {1.0};
    const double k2[1] = {2.0};
    const double s = sigma_of_nu(gauss, k1, sigma_rule(gauss, k1));
    report.add_case({"sigma gaussian k=1", 2.0, rel_diff(s, std::exp(1.0)) / 1e-8, true, s,
                     std::exp(1.0), "against e^{k^2}"});
    const double a = sigma_of_nu(quartic, k2, sigma_rule(quartic, k2, 6.0));
    const double b = sigma_of_nu(quartic, k2, sigma_rule(quartic, k2, 10.0));
    report.add_case({"sigma quartic k=2", 2.0, rel_diff(a, b) / 1e-8, true, a, b, "box 6 vs box 10"});
  });
  guarded(report, "fixed point", [&] {
    const Window w = Window::from_nu(gauss);
    double worst = 0.0;
    for (int j = 0; j < 20; ++j) {
      const cplx z[1] = {cplx(-2.0 + 0.2 * j, -1.0 + 0.1 * j)};
      const cplx exact = std::pow(2.0 * kPi, -0.5) * std::exp(-0.5 * z[0] * z[0]);
      const cplx v = w(ComplexPoint(z));
      const double r = std::abs(v - exact) / std::abs(exact);
      worst = std::max(worst, r);
      report.add_point({"phi gaussian profile", 2.0, {z[0].real(), z[0].imag()}, r / 1e-5,
                        std::abs(v), std::abs(exact)});
    }
    report.add_case({"phi gaussian profile", 2.0, worst / 1e-5, true, worst, 1e-5,
                     "phi from the Gaussian profile vs (2 pi)^{-1/2} e^{-z^2/2}"});
  });
  // |f|_{L^2(dx)} for the decaying test functions
  auto lebesgue_norm = [](const TestFunction& f) {
    const Rule1D r = composite_legendre_1d(480, -15.0, 15.0);
    double s = 0.0;
    for (std::size_t j = 0; j < r.nodes.size(); ++j) {
      const double x[1] = {r.nodes[j]};
      s += std::exp(r.log_lebesgue[j]) * std::norm(f(x));
    }
    return std::sqrt(s);
  };
  auto box_norm = [](const std::function<cplx(double, double)>& g, double a_half, double b_half) {
    const Rule1D ra = composite_legendre_1d(8 * static_cast<int>(std::ceil(4.0 * a_half)), -a_half, a_half);
    const Rule1D rb = composite_legendre_1d(8 * static_cast<int>(std::ceil(4.0 * b_half)), -b_half, b_half);
    double s = 0.0;
    for (std::size_t i = 0; i < ra.nodes.size(); ++i) {
      for (std::size_t j = 0; j < rb.nodes.size(); ++j) {
        s += std::exp(ra.log_lebesgue[i] + rb.log_lebesgue[j]) * std::norm(g(ra.nodes[i], rb.nodes[j]));
      }
    }
    return std::sqrt(s);
  };
  const std::vector<TestFunction> family = {
      TestFunction::gaussian_quadratic(-0.5, 1).renamed("e^{-x^2/2}"),
      TestFunction::poly_gaussian({Polynomial::coordinate(1, 0), -0.5, {0.0}}, "x e^{-x^2/2}"),
      TestFunction::poly_gaussian({Polynomial::hermite_product(std::vector<int>{2}), -0.5, {0.0}},
                                  "He_2 e^{-x^2/2}"),
  };
  struct Case {
    std::string label;
    Window window;
    double b_half;
  };
  const std::vector<Case> windows = {
      {"gaussian window", Window::standard_gaussian(1), 9.0},
      {"gaussian profile", Window::from_nu(gauss), 9.0},
      {"quartic profile", Window::from_nu(quartic), 3.5},
  };
  for (const Case& c : windows) {
    for (const TestFunction& f : family) {
      guarded(report, c.label + " " + f.name(), [&] {
        const ConvolutionTransform C(c.window, f, c.b_half);
        const double lhs = box_norm(
            [&](double a, double b) {
              const cplx z[1] = {cplx(a, b)};
              return C.tilde(z);
            },
            9.0, c.b_half);
        const double rhs = lebesgue_norm(f);
        report.add_case({"C~ " + c.label + " " + f.name(), 2.0, rel_diff(lhs, rhs) / 1e-4, true, lhs,
                         rhs, "||C~ f||_{L^2(R^2)} vs ||f||_{L^2(R)}"});
      });
    }
  }
  guarded(report, "windowed isometry", [&] {
    const Window w = Window::gaussian(1);
    std::vector<double> ratio;
    for (std::size_t i = 0; i < 2; ++i) {
      const TestFunction& f = family[i];
      const double n = box_norm(
          [&](double a, double b) {
            const double av[1] = {a};
            const double bv[1] = {b};
            return windowed_ft(f, w, av, bv);
          },
          9.0, 9.0);
      ratio.push_back(n / lebesgue_norm(f));
    }
    report.add_case({"F_phi isometry constant", 2.0, rel_diff(ratio[1], ratio[0]) / 1e-5, true,
                     ratio[0], ratio[1], "ratio for e^{-x^2/2} vs x e^{-x^2/2}"});
  });
  guarded(report, "covariance", [&] {
    const CovarianceFit g00 = gaussian_covariance_check(Window::gaussian(1), 0.0, 0.0);
    const CovarianceFit g11 = gaussian_covariance_check(Window::gaussian(1), 1.0, 1.0);
    const cplx expect = std::exp(cplx(0.5, -1.0));
    report.add_case({"covariance gaussian (0,0)", 2.0,
                     std::max(g00.residual, std::abs(g00.c - 1.0)) / 1e-9, true, g00.residual,
                     std::abs(g00.c), "c = 1"});
    report.add_case({"covariance gaussian (1,1)", 2.0,
                     std::max(g11.residual, std::abs(g11.c - expect)) / 1e-9, true, g11.residual,
                     std::abs(g11.c), "c = e^{1/2} e^{-i}"});
    const CovarianceFit q = gaussian_covariance_check(Window::from_nu(quartic), 0.0, 1.0);
    report.add_flag("covariance quartic (0,1)", 2.0, q.residual > 1e-2,
                    fmt::format("non-Gaussian window must fail: residual {:.6g} (log10 {:.3g})",
                                q.residual, q.log10_residual));
  });
  guarded(report, "equivalence", [&] {
    const Window phi = Window::standard_gaussian(1);
    const Window win = Window::gaussian(1);
    const double scale = std::pow(2.0 * kPi, -0.5) * std::pow(kPi, -0.25);
    double worst = 0.0;
    for (const TestFunction& f : family) {
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          const double a[1] = {-2.0 + i};
          const double b[1] = {-2.0 + j};
          const cplx z[1] = {cplx(a[0], b[0])};
          const cplx lhs = holo_convolution_tilde(phi, f, z) * std::exp(cplx(0.0, a[0] * b[0]));
          const cplx rhs = scale * windowed_ft(f, win, a, b);
          worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
        }
      }
    }
    report.add_case({"C~ e^{iab} vs windowed FT", 2.0, worst / 1e-5, true, worst, scale,
                     "constant (2 pi)^{-1/2} pi^{-1/4}; 5x5 (a,b) grid"});
  });
  guarded(report, "relation to S", [&] {
    const Window phi = Window::standard_gaussian(1);
    const QuadratureRule rule = default_transform_rule(1, cfg.hermite_order);
    double worst = 0.0;
    for (const char* s : {"gaussian:-0.5", "hermite:2", "explinear:0.5"}) {
      const TestFunction f = select_function(s, 1);
      for (int j = 0; j < 8; ++j) {
        const cplx z[1] = {std::polar(0.4 * j, 0.7 * j)};
        const cplx a = holo_convolution(phi, f, z);
        const cplx b = sb_transform(f, z, rule);
        worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
      }
    }
    report.add_case({"C_phi vs S", 2.0, worst / 1e-6, true, worst, 1e-6,
                     "Gaussian window convolution vs transform quadrature, |err| / (1 + |S f|)"});
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"isometry",      "unitarity", "holder",
                                                 "roundtrip",     "interpolation", "hyper",
                                                 "schwartz",      "phase"};
  return names;
}

std::vector<double> default_exponents(const std::string& suite, int d) {
  if (suite == "unitarity" || suite == "holder") return {1.5, 2.0, 3.0};
  if (suite == "roundtrip") {
    if (d == 3) return {2.0};
    if (d > 1) return {1.5, 2.0, 3.0};
    return {1.25, 1.5, 2.0, 3.0, 5.0};
  }
  if (suite == "interpolation") {
    if (d == 3) return {2.0};
    return {1.25, 1.5, 2.0};
  }
  if (suite == "hyper") {
    if (d > 1) return {1.25, 1.5, 2.0};
    return {1.25, 1.5, 2.0, 3.0, 4.0};
  }
  return {2.0};
}

std::vector<std::string> default_functions(const std::string& suite, int d) {
  if (suite == "unitarity") return {"const1", "hermite:1", "hermite:2", "explinear:0.5", "gaussian:-0.25"};
  if (suite == "schwartz") return {"gaussian:-0.25", "hermite:3", "const1"};
  if (suite == "creation") return {"const1", "hermite:1", "hermite:2", "explinear:0.5", "gaussian:-0.25"};
  if (suite == "isometry" || suite == "phase") return {};
  if (d == 3) {
    if (suite == "roundtrip") return {"const1", "hermite:1", "gaussian:-0.25"};
    if (suite == "interpolation") return {"const1", "gaussian:-0.25"};
  }
  return {"const1", "hermite:1", "hermite:2", "hermite:3", "explinear:1", "gaussian:-0.25"};
}

CheckReport run_suite(const std::string& suite, const RunConfig& cfg) {
  cfg.validate();
  CheckReport report(suite, cfg.tolerance_for(suite));
  nlohmann::ordered_json echo = cfg.to_json();
  echo["p"] = exponents(suite, cfg);
  echo["functions"] = selectors(suite, cfg);
  report.set_config(echo);
  guarded(report, suite, [&] {
    if (suite == "isometry") {
      isometry_suite(report, cfg);
    } else if (suite == "unitarity") {
      unitarity_suite(report, cfg);
    } else if (suite == "holder") {
      holder_suite(report, cfg);
    } else if (suite == "roundtrip") {
      roundtrip_suite(report, cfg);
    } else if (suite == "interpolation") {
      interpolation_suite(report, cfg);
    } else if (suite == "hyper") {
      hyper_suite(report, cfg);
    } else if (suite == "schwartz") {
      schwartz_suite(report, cfg);
    } else if (suite == "phase") {
      phase_suite(report, cfg);
    }
  });
  return report;
}

}  // namespace bargmann
