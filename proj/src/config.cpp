#include "bargmann/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "bargmann/errors.hpp"

namespace bargmann {

namespace {

const std::map<std::string, double> kDefaultTolerance = {
    {"isometry", 1e-6},    {"unitarity", 1e-6}, {"holder", 1e-7},  {"roundtrip", 1e-5},
    {"interpolation", 0.02}, {"hyper", 1e-7},   {"schwartz", 1.0}, {"phase", 1.0},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not a number: '" + s + "'");
  }
  return v;
}

long long parse_integer(const std::string& raw) {
  const std::string s = trim(raw);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not an integer: '" + s + "'");
  }
  return v;
}

}  // namespace

RunConfig::RunConfig() : tolerance(kDefaultTolerance) {}

bool RunConfig::inversion_uses_gauss_hermite() const {
  return inversion_scheme == "gauss_hermite" || (inversion_scheme == "auto" && d > 1);
}

int RunConfig::effective_schwartz_cap() const {
  if (schwartz_cap >= 0) return schwartz_cap;
  return d == 3 ? 1 : 3;
}

int RunConfig::effective_grid_points() const {
  if (grid_points > 0) return grid_points;
  return d == 1 ? 41 : (d == 2 ? 11 : 5);
}

double RunConfig::tolerance_for(const std::string& suite) const {
  auto it = tolerance.find(suite);
  if (it == tolerance.end()) throw ArgumentError("unknown suite '" + suite + "'");
  return it->second;
}

void RunConfig::validate() const {
  if (d < 1 || d > kMaxDimension) throw ArgumentError("d must be 1, 2 or 3");
  for (double v : p) {
    if (!(v > 1.0) || !std::isfinite(v)) throw DomainError(fmt::format("p = {:g} is outside (1, inf)", v));
  }
  for (const auto& [k, v] : tolerance) {
    if (!(v > 0.0)) throw ArgumentError("tolerance for " + k + " must be positive");
  }
  if (grid_points < 0 || !(extent_x >= 0.0) || !(extent_y >= 0.0)) throw ArgumentError("invalid grid");
  if (hermite_order < 2) throw ArgumentError("hermite_order must be at least 2");
  if (inversion_radius && !(*inversion_radius > 0.0)) throw ArgumentError("inversion radius must be positive");
  if (inversion_points < 0) throw ArgumentError("inversion points must be non-negative");
  if (isometry_trials < 1) throw ArgumentError("isometry trials must be positive");
  if (schwartz_n_max < 0 || schwartz_cap < -1) throw ArgumentError("Schwartz limits must be non-negative");
  if (!(schwartz_extent_large > schwartz_extent_small && schwartz_extent_small > 0.0 &&
        schwartz_spacing > 0.0)) {
    throw ArgumentError("invalid Schwartz grid");
  }
  if (!(holder_envelope_y_scale > 0.0)) throw ArgumentError("envelope scale must be positive");
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["p"] = p;
  j["functions"] = functions;
  j["seed"] = seed;
  j["grid"] = {{"extent_x", extent_x}, {"extent_y", extent_y}, {"points", effective_grid_points()}};
  j["quadrature"] = {{"hermite_order", hermite_order}};
  nlohmann::ordered_json inv;
  inv["radius"] = inversion_radius ? nlohmann::ordered_json(*inversion_radius)
                                   : nlohmann::ordered_json("auto");
  inv["points"] = inversion_points;
  inv["scheme"] = inversion_scheme;
  j["inversion"] = inv;
  j["isometry"] = {{"trials", isometry_trials}};
  j["schwartz"] = {{"n_max", schwartz_n_max},
                   {"extent_small", schwartz_extent_small},
                   {"extent_large", schwartz_extent_large},
                   {"spacing", schwartz_spacing},
                   {"cap", effective_schwartz_cap()}};
  nlohmann::ordered_json tol;
  for (const auto& [k, v] : tolerance) tol[k] = v;
  j["tolerance"] = tol;
  j["debug"] = {{"holder_envelope_y_scale", holder_envelope_y_scale}};
  return j;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& s : split_list(text)) out.push_back(parse_real(s));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::stringstream in(text);
  std::string line;
  std::string section;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line.front() == '[') {
        if (line.back() != ']') throw ParseError("unterminated section header");
        section = trim(line.substr(1, line.size() - 2));
        static const std::vector<std::string> known = {"run",       "grid",     "quadrature",
                                                       "inversion", "isometry", "schwartz",
                                                       "tolerance", "debug"};
        if (std::find(known.begin(), known.end(), section) == known.end()) {
          throw ParseError("unknown section [" + section + "]");
        }
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      const std::string full = section.empty() ? key : section + "." + key;
      if (full == "run.d") {
        cfg.d = static_cast<int>(parse_integer(value));
      } else if (full == "run.p") {
        cfg.p = parse_real_list(value);
      } else if (full == "run.functions") {
        cfg.functions = split_list(value);
      } else if (full == "run.seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_integer(value));
      } else if (full == "run.out") {
        cfg.out_dir = value;
      } else if (full == "grid.extent_x") {
        cfg.extent_x = parse_real(value);
      } else if (full == "grid.extent_y") {
        cfg.extent_y = parse_real(value);
      } else if (full == "grid.points") {
        cfg.grid_points = static_cast<int>(parse_integer(value));
      } else if (full == "quadrature.hermite_order") {
        cfg.hermite_order = static_cast<int>(parse_integer(value));
      } else if (full == "inversion.radius") {
        if (value == "auto") {
          cfg.inversion_radius.reset();
        } else {
          cfg.inversion_radius = parse_real(value);
        }
      } else if (full == "inversion.points") {
        cfg.inversion_points = static_cast<int>(parse_integer(value));
      } else if (full == "inversion.scheme") {
        if (value != "auto" && value != "truncated_box" && value != "gauss_hermite") {
          throw ParseError("inversion.scheme must be auto, truncated_box or gauss_hermite");
        }
        cfg.inversion_scheme = value;
      } else if (full == "isometry.trials") {
        cfg.isometry_trials = static_cast<int>(parse_integer(value));
      } else if (full == "schwartz.n_max") {
        cfg.schwartz_n_max = static_cast<int>(parse_integer(value));
      } else if (full == "schwartz.extent_small") {
        cfg.schwartz_extent_small = parse_real(value);
      } else if (full == "schwartz.extent_large") {
        cfg.schwartz_extent_large = parse_real(value);
      } else if (full == "schwartz.spacing") {
        cfg.schwartz_spacing = parse_real(value);
      } else if (full == "schwartz.cap") {
        cfg.schwartz_cap = static_cast<int>(parse_integer(value));
      } else if (section == "tolerance") {
        if (!kDefaultTolerance.count(key)) throw ParseError("unknown suite '" + key + "'");
        cfg.tolerance[key] = parse_real(value);
      } else if (full == "debug.holder_envelope_y_scale") {
        cfg.holder_envelope_y_scale = parse_real(value);
      } else {
        throw ParseError("unknown key '" + full + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("config line {}: {}", number, e.what()));
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

std::vector<std::string> split_axes(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '/')) out.push_back(trim(item));
  return out;
}

}  // namespace

TestFunction select_function(const std::string& selector, int d) {
  if (d < 1 || d > kMaxDimension) throw ArgumentError("d must be 1, 2 or 3");
  const std::string s = trim(selector);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  try {
    if (head == "const1" && arg.empty()) return TestFunction::hermite(std::vector<int>(d, 0)).renamed("const1");
    if (head == "poly" && arg.empty()) {
      Polynomial q = Polynomial::constant(d, 1.0);
      q += Polynomial::monomial(d, {1, 0, 0}, 2.0);
      q += Polynomial::monomial(d, {2, 0, 0}, -1.0);
      q += Polynomial::monomial(d, {3, 0, 0}, 1.0 / 3.0);
      return TestFunction::polynomial(q).renamed("poly");
    }
    if (head == "hermite" && !arg.empty()) {
      const auto parts = split_axes(arg);
      if (static_cast<int>(parts.size()) > d) throw ParseError("too many axes");
      std::vector<int> n(d, 0);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const long long v = parse_integer(parts[k]);
        if (v < 0 || v > 40) throw ParseError("Hermite degree out of range");
        n[k] = static_cast<int>(v);
      }
      return TestFunction::hermite(n).renamed(s);
    }
    if (head == "explinear" && !arg.empty()) {
      const auto parts = split_axes(arg);
      if (static_cast<int>(parts.size()) > d) throw ParseError("too many axes");
      std::vector<cplx> a(d, 0.0);
      for (std::size_t k = 0; k < parts.size(); ++k) a[k] = parse_real(parts[k]);
      return TestFunction::exp_linear(a).renamed(s);
    }
    if (head == "gaussian" && !arg.empty()) {
      return TestFunction::gaussian_quadratic(parse_real(arg), d).renamed(s);
    }
  } catch (const ParseError& e) {
    throw ParseError("bad selector '" + s + "': " + e.what());
  }
  throw ParseError("unknown test function selector '" + s + "'");
}

}  // namespace bargmann
