#pragma once

#include <string>
#include <vector>

#include "bargmann/config.hpp"
#include "bargmann/inversion.hpp"
#include "bargmann/report.hpp"

namespace bargmann {

/// Names accepted by run_suite, in report order.
const std::vector<std::string>& suite_names();

/// Exponents and test-function selectors a suite uses when the config leaves them empty.
std::vector<double> default_exponents(const std::string& suite, int d = 1);
std::vector<std::string> default_functions(const std::string& suite, int d);

/// Runs one verification suite. Errors raised by individual cases are caught,
/// recorded and mark the report incomplete; the effective config is echoed
/// into the report.
///
///   isometry       ||f||_{L^2(rho)} vs the mu-norm of S f, random Hermite combinations
///   unitarity      ||f||_{L^2(rho_s)} vs ||S f||_{L^2(mu_s)}
///   holder         pointwise envelope, tightness at z = 1, shell decay
///   roundtrip      adjoint inversion of S f on |x|_inf <= 3 (2 in d = 3)
///   interpolation  LpPrime image norm finiteness, plus L1 / Mixed side by side
///   hyper          forward (p <= 2) and reverse (p >= 2) hypercontractive bounds
///   schwartz       C_n trends, membership suite, creation identity  (residuals / threshold)
///   phase          window constructions and equivalences            (residuals / threshold)
CheckReport run_suite(const std::string& suite, const RunConfig& cfg);

/// Inversion settings for exponent p: the configured scheme ("auto" = truncated
/// box for d = 1, nested Gauss-Hermite of order 48 / 32 / 14 for d = 1 / 2 / 3),
/// radius and node count.
InversionConfig inversion_config(const RunConfig& cfg, double p);

/// Error classes recorded by suites, used by callers to pick exit codes.
inline constexpr const char* kGateErrorTag = "numerical gate: ";
inline constexpr const char* kInputErrorTag = "input error: ";

}  // namespace bargmann
