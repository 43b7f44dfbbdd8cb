#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "bargmann/config.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/inversion.hpp"
#include "bargmann/phase_space.hpp"
#include "bargmann/report.hpp"
#include "bargmann/suites.hpp"
#include "bargmann/transform.hpp"

namespace fs = std::filesystem;
using namespace bargmann;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInput = 2, kGate = 3 };

struct Options {
  std::string config_path;
  std::string out_dir;
  std::string suite;
  std::string p_list;
  std::string functions;
  std::string points_path;
  std::string window = "gaussian";
  std::vector<std::string> inputs;
  int d = 0;
  long long seed = -1;
  int count = 10;
  double envelope_scale = 0.0;
};

RunConfig effective_config(const Options& o) {
  RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
  if (o.d > 0) cfg.d = o.d;
  if (!o.p_list.empty()) cfg.p = parse_real_list(o.p_list);
  if (!o.functions.empty()) cfg.functions = split_list(o.functions);
  if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  if (o.envelope_scale > 0.0) cfg.holder_envelope_y_scale = o.envelope_scale;
  cfg.validate();
  return cfg;
}

// Rows of `width` reals separated by commas or blanks; '#' starts a comment.
std::vector<std::vector<double>> read_points(const std::string& path, int width) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read points file " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace_if(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; }, ',');
    if (split_list(line).empty()) continue;
    try {
      std::vector<double> row = parse_real_list(line);
      if (static_cast<int>(row.size()) != width) {
        throw ParseError(fmt::format("expected {} values, found {}", width, row.size()));
      }
      rows.push_back(std::move(row));
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("{} line {}: {}", path, number, e.what()));
    }
  }
  if (rows.empty()) throw ParseError(path + ": no points");
  return rows;
}

// Explicit points file, else `count` seeded uniform points in [-2, 2]^width.
std::vector<std::vector<double>> input_points(const Options& o, const RunConfig& cfg, int width) {
  if (!o.points_path.empty()) return read_points(o.points_path, width);
  if (o.count < 1) throw ArgumentError("--count must be positive");
  std::mt19937_64 gen(cfg.seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<std::vector<double>> rows(o.count, std::vector<double>(width));
  for (auto& r : rows) {
    for (double& v : r) v = u(gen);
  }
  return rows;
}

TestFunction single_function(const RunConfig& cfg, const std::string& fallback = "const1") {
  if (cfg.functions.size() > 1) throw ArgumentError("this command takes one test function");
  return select_function(cfg.functions.empty() ? fallback : cfg.functions.front(), cfg.d);
}

std::string axis_header(const std::string& name, int d) {
  if (d == 1) return name;
  std::string s;
  for (int k = 1; k <= d; ++k) s += (k > 1 ? "," : "") + name + std::to_string(k);
  return s;
}

std::string join_numbers(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + csv_number(v[i]);
  return s;
}

std::string output_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  return (fs::path(cfg.out_dir) / name).string();
}

int cmd_transform(const Options& o) {
  const RunConfig cfg = effective_config(o);
  const TestFunction f = single_function(cfg);
  const auto rows = input_points(o, cfg, 2 * cfg.d);
  const HoloFunction F = sb_transform_holo(f);
  std::string csv = axis_header("x", cfg.d) + "," + axis_header("y", cfg.d) + ",re,im\n";
  for (const auto& r : rows) {
    const cplx v = F(from_real_coordinates(r));
    csv += join_numbers(r) + "," + csv_number(v.real()) + "," + csv_number(v.imag()) + "\n";
  }
  const std::string path = output_path(cfg, "transform.csv");
  write_file_atomic(path, csv);
  fmt::print("{} points of S[{}] -> {}\n", rows.size(), f.name(), path);
  return kPass;
}

int cmd_invert(const Options& o) {
  const RunConfig cfg = effective_config(o);
  if (cfg.p.size() > 1) throw ArgumentError("invert takes one exponent");
  const double p = cfg.p.empty() ? 2.0 : cfg.p.front();
  const TestFunction f = single_function(cfg);
  const auto rows = input_points(o, cfg, cfg.d);
  const auto res = adjoint_inverse_grid(sb_transform_holo(f), inversion_config(cfg, p), rows);
  std::string csv = axis_header("x", cfg.d) + ",re,im,f_re,f_im,abs_error\n";
  int warnings = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const cplx exact = f(rows[i]);
    csv += fmt::format("{},{},{},{},{},{}\n", join_numbers(rows[i]), csv_number(res[i].value.real()),
                       csv_number(res[i].value.imag()), csv_number(exact.real()),
                       csv_number(exact.imag()), csv_number(std::abs(res[i].value - exact)));
    warnings += res[i].truncation_warning ? 1 : 0;
  }
  const std::string path = output_path(cfg, "invert.csv");
  write_file_atomic(path, csv);
  fmt::print("{} points of S*[S[{}]] at p = {:g} -> {}\n", rows.size(), f.name(), p, path);
  if (warnings > 0) fmt::print(stderr, "warning: {} points flagged for truncation\n", warnings);
  return kPass;
}

int cmd_phase(const Options& o) {
  const RunConfig cfg = effective_config(o);
  if (cfg.d != 1) throw UnsupportedError("phase-space windows are built for d = 1 only");
  DecayProfile profile = o.window == "quartic" ? DecayProfile::quartic() : DecayProfile::gaussian(1);
  const Window phi = Window::from_nu(profile);
  // Profile windows convolve through the Fourier side, which needs a decaying f.
  const TestFunction f = single_function(cfg, "gaussian:-0.25");
  const auto rows = input_points(o, cfg, 2);
  double y_max = 1.0;
  for (const auto& r : rows) y_max = std::max(y_max, std::abs(r[1]));
  const ConvolutionTransform conv(phi, f, y_max);
  std::string csv = "x,y,phi_re,phi_im,tilde_re,tilde_im\n";
  for (const auto& r : rows) {
    const std::vector<cplx> z{cplx(r[0], r[1])};
    const cplx w = phi(z);
    const cplx t = conv.tilde(z);
    csv += fmt::format("{},{},{},{},{}\n", join_numbers(r), csv_number(w.real()), csv_number(w.imag()),
                       csv_number(t.real()), csv_number(t.imag()));
  }
  const std::string path = output_path(cfg, "phase.csv");
  write_file_atomic(path, csv);
  fmt::print("{} points, window {}, f = {} -> {}\n", rows.size(), phi.describe(), f.name(), path);
  return kPass;
}

int exit_for(const CheckReport& r) {
  bool gate = false;
  for (const auto& e : r.errors()) {
    if (e.rfind(kGateErrorTag, 0) == 0) {
      gate = true;
    } else {
      return kInput;
    }
  }
  if (gate) return kGate;
  return r.violations() > 0 ? kViolation : kPass;
}

int cmd_check(const Options& o) {
  const RunConfig cfg = effective_config(o);
  const CheckReport report = run_suite(o.suite, cfg);
  const std::string json_path = output_path(cfg, o.suite + ".json");
  const std::string csv_path = output_path(cfg, o.suite + ".csv");
  write_file_atomic(json_path, report.to_json().dump(2) + "\n");
  write_file_atomic(csv_path, report_csv(report));
  fmt::print("{}: {} cases, max residual {:.3e} (tolerance {:g}), {} violations{}\n", o.suite,
             report.cases().size(), report.max_residual(), report.tolerance(), report.violations(),
             report.complete() ? "" : ", INCOMPLETE");
  for (const auto& e : report.errors()) fmt::print(stderr, "  {}\n", e);
  fmt::print("  -> {}\n  -> {}\n", json_path, csv_path);
  return exit_for(report);
}

struct SummaryRow {
  std::string suite;
  double p;
  std::string f;
  double residual;
  double tolerance;
  bool pass;
};

int cmd_report(const Options& o) {
  if (o.inputs.empty()) {
    fmt::print(stderr, "no reports\n");
    return kInput;
  }
  const RunConfig cfg = effective_config(o);
  std::map<std::tuple<std::string, double, std::string>, SummaryRow> rows;
  bool all_passed = true;
  for (const auto& path : o.inputs) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read report " + path);
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
    CheckReport r = [&] {
      try {
        return CheckReport::from_json(j);
      } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
      }
    }();
    all_passed = all_passed && r.passed();
    for (const auto& c : r.cases()) {
      auto key = std::make_tuple(r.suite(), c.p, c.f);
      auto [it, fresh] = rows.try_emplace(key, SummaryRow{r.suite(), c.p, c.f, c.residual, r.tolerance(), c.pass});
      if (!fresh) {
        it->second.residual = std::max(it->second.residual, c.residual);
        it->second.pass = it->second.pass && c.pass;
      }
    }
  }
  std::string csv = "suite,p,f,residual,tolerance,pass\n";
  std::string text = fmt::format("{:<14} {:>6}  {:<40} {:>12} {:>10}  {}\n", "suite", "p", "f", "residual",
                                 "tolerance", "result");
  int failed = 0;
  for (const auto& [key, row] : rows) {
    csv += fmt::format("{},{},{},{},{},{}\n", csv_field(row.suite), csv_number(row.p), csv_field(row.f),
                       csv_number(row.residual), csv_number(row.tolerance), row.pass ? "true" : "false");
    text += fmt::format("{:<14} {:>6g}  {:<40} {:>12.3e} {:>10.1e}  {}\n", row.suite, row.p, row.f,
                        row.residual, row.tolerance, row.pass ? "PASS" : "FAIL");
    failed += row.pass ? 0 : 1;
  }
  const std::string path = output_path(cfg, "summary.csv");
  write_file_atomic(path, csv);
  fmt::print("{}{} rows, {} failed -> {}\n", text, rows.size(), failed, path);
  return failed == 0 && all_passed ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segal-Bargmann transform evaluation and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "Run configuration file");
  app.add_option("--out", o.out_dir, "Output directory (overrides run.out)");
  app.add_option("--d", o.d, "Dimension 1..3");
  app.add_option("--p", o.p_list, "Comma-separated exponents");
  app.add_option("--f", o.functions, "Comma-separated test-function selectors");
  app.add_option("--seed", o.seed, "Seed for random spot-check points");
  app.add_option("--debug-envelope-scale", o.envelope_scale,
                 "Debug: scale the y exponent of the Holder envelope");

  auto* transform = app.add_subcommand("transform", "Evaluate S f at points of C^d");
  auto* invert = app.add_subcommand("invert", "Recover f from S f by the p-adjoint inversion");
  auto* phase = app.add_subcommand("phase", "Evaluate a window from its profile and the weighted convolution");
  for (auto* sub : {transform, invert, phase}) {
    sub->add_option("--points", o.points_path, "Points file (default: --count random points)");
    sub->add_option("--count", o.count, "Number of random points when no file is given");
  }
  phase->add_option("--window", o.window, "Profile of the window")
      ->check(CLI::IsMember({"gaussian", "quartic"}));
  auto* check = app.add_subcommand("check", "Run one verification suite");
  check->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  auto* report = app.add_subcommand("report", "Summarize JSON reports");
  report->add_option("inputs", o.inputs, "Report files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*transform) return cmd_transform(o);
    if (*invert) return cmd_invert(o);
    if (*phase) return cmd_phase(o);
    if (*check) return cmd_check(o);
    return cmd_report(o);
  } catch (const DivergenceError& e) {
    fmt::print(stderr, "numerical gate: {}\n", e.what());
    return kGate;
  } catch (const ConvergenceError& e) {
    fmt::print(stderr, "numerical gate: {}\n", e.what());
    return kGate;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInput;
  }
}
