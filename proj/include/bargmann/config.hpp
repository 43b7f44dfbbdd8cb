#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bargmann/test_function.hpp"

namespace bargmann {

/// Settings of a batch run. Parsed from a key=value file with [section]
/// headers; everything not given keeps the documented default, and the
/// effective values are echoed into every report.
struct RunConfig {
  int d = 1;
  /// Empty: each suite uses its own exponent list.
  std::vector<double> p;
  /// Empty: each suite uses its own test family.
  std::vector<std::string> functions;
  std::uint64_t seed = 20240611;
  std::string out_dir = ".";

  // [grid]: complex evaluation grid for envelope checks
  double extent_x = 5.0;
  double extent_y = 5.0;
  /// Per axis; 0 picks 41 / 11 / 5 for d = 1 / 2 / 3 (the grid has points^(2d) nodes).
  int grid_points = 0;
  int effective_grid_points() const;

  // [quadrature]
  int hermite_order = 64;

  // [inversion]
  std::optional<double> inversion_radius;
  int inversion_points = 0;
  /// auto: truncated box for d = 1, Gauss-Hermite for d > 1.
  std::string inversion_scheme = "auto";
  bool inversion_uses_gauss_hermite() const;

  // [isometry]
  int isometry_trials = 10;

  // [schwartz]
  int schwartz_n_max = 6;
  double schwartz_extent_small = 5.0;
  double schwartz_extent_large = 8.0;
  double schwartz_spacing = 0.05;
  /// Bound on |alpha|, |beta|; -1 picks 3, or 1 for d = 3 (the pair count grows as cap^(2d)).
  int schwartz_cap = -1;
  int effective_schwartz_cap() const;

  // [tolerance], keyed by suite name
  std::map<std::string, double> tolerance;

  // [debug]: multiplies the y exponent of the Holder envelope (1 = correct)
  double holder_envelope_y_scale = 1.0;

  RunConfig();

  double tolerance_for(const std::string& suite) const;
  /// Throws ArgumentError / DomainError on out-of-range values.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

/// Parses the configuration text; ParseError messages name the line.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Comma-separated list of reals.
std::vector<double> parse_real_list(const std::string& text);
std::vector<std::string> split_list(const std::string& text);

/// Test-function selectors:
///   const1             f = 1
///   hermite:n[/n2/n3]  He_n1(x_1) He_n2(x_2) ... (missing axes 0)
///   explinear:a[/..]   e^{a.x} (missing axes 0)
///   gaussian:alpha     e^{alpha |x|^2}
///   poly               1 + 2 x_1 - x_1^2 + x_1^3 / 3
TestFunction select_function(const std::string& selector, int d);

}  // namespace bargmann
