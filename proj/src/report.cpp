#include "bargmann/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>

#include "bargmann/errors.hpp"

namespace bargmann {

CheckReport::CheckReport(std::string suite, double tolerance)
    : suite_(std::move(suite)), tolerance_(tolerance) {
  if (!(tolerance_ > 0.0)) throw ArgumentError("tolerance must be positive");
}

void CheckReport::mark_incomplete(const std::string& reason) {
  complete_ = false;
  errors_.push_back(reason);
}

void CheckReport::note_residual(double r) {
  if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
  max_residual_ = std::max(max_residual_, r);
  if (r > tolerance_) ++violations_;
}

void CheckReport::add_point(PointRecord rec, bool keep_row) {
  note_residual(rec.residual);
  auto worse = [](const PointRecord& a, const PointRecord& b) { return a.residual > b.residual; };
  if (worst_.size() < kWorstKept || rec.residual > worst_.back().residual) {
    worst_.insert(std::upper_bound(worst_.begin(), worst_.end(), rec, worse), rec);
    if (worst_.size() > kWorstKept) worst_.pop_back();
  }
  if (keep_row) points_.push_back(std::move(rec));
}

void CheckReport::add_case(CaseRecord rec) {
  if (std::isnan(rec.residual)) rec.residual = std::numeric_limits<double>::infinity();
  rec.pass = rec.residual <= tolerance_;
  note_residual(rec.residual);
  cases_.push_back(std::move(rec));
}

void CheckReport::add_flag(const std::string& f, double p, bool ok, const std::string& note) {
  CaseRecord rec;
  rec.f = f;
  rec.p = p;
  rec.residual = ok ? 0.0 : 2.0 * tolerance_;
  rec.note = note;
  add_case(std::move(rec));
}

void CheckReport::absorb(const CheckReport& other) {
  for (const CaseRecord& c : other.cases_) add_case(c);
  for (const PointRecord& p : other.points_) add_point(p);
  for (const auto& e : other.errors_) mark_incomplete(e);
  if (!other.complete_ && other.errors_.empty()) mark_incomplete(other.suite_ + " incomplete");
}

namespace {

nlohmann::ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double number_or_inf(const nlohmann::ordered_json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

nlohmann::ordered_json point_json(const PointRecord& p) {
  nlohmann::ordered_json j;
  j["f"] = p.f;
  j["p"] = p.p;
  j["point"] = p.point;
  j["residual"] = finite_or_null(p.residual);
  j["lhs"] = finite_or_null(p.lhs);
  j["rhs"] = finite_or_null(p.rhs);
  return j;
}

}  // namespace

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = suite_;
  j["complete"] = complete_;
  j["grid"] = grid_;
  j["tolerance"] = tolerance_;
  j["max_residual"] = finite_or_null(max_residual_);
  j["violations"] = violations_;
  j["errors"] = errors_;
  j["config"] = config_;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const CaseRecord& c : cases_) {
    nlohmann::ordered_json cj;
    cj["p"] = c.p;
    cj["f"] = c.f;
    cj["residual"] = finite_or_null(c.residual);
    cj["pass"] = c.pass;
    cj["lhs"] = c.lhs ? finite_or_null(*c.lhs) : nlohmann::ordered_json(nullptr);
    cj["rhs"] = c.rhs ? finite_or_null(*c.rhs) : nlohmann::ordered_json(nullptr);
    cj["note"] = c.note;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  nlohmann::ordered_json worst = nlohmann::ordered_json::array();
  for (const PointRecord& p : worst_) worst.push_back(point_json(p));
  j["worst"] = std::move(worst);
  return j;
}

CheckReport CheckReport::from_json(const nlohmann::ordered_json& j) {
  try {
    if (!j.is_object()) throw ParseError("report is not a JSON object");
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw ParseError("unsupported report schema_version");
    }
    CheckReport r(j.at("suite").get<std::string>(), j.at("tolerance").get<double>());
    r.grid_ = j.at("grid").get<std::string>();
    r.complete_ = j.at("complete").get<bool>();
    r.max_residual_ = number_or_inf(j.at("max_residual"));
    r.violations_ = j.at("violations").get<int>();
    if (j.contains("errors")) r.errors_ = j.at("errors").get<std::vector<std::string>>();
    r.config_ = j.at("config");
    for (const auto& cj : j.at("cases")) {
      CaseRecord c;
      c.p = cj.at("p").get<double>();
      c.f = cj.at("f").get<std::string>();
      c.residual = number_or_inf(cj.at("residual"));
      c.pass = cj.at("pass").get<bool>();
      if (!cj.at("lhs").is_null()) c.lhs = cj.at("lhs").get<double>();
      if (!cj.at("rhs").is_null()) c.rhs = cj.at("rhs").get<double>();
      if (cj.contains("note")) c.note = cj.at("note").get<std::string>();
      r.cases_.push_back(std::move(c));
    }
    for (const auto& pj : j.at("worst")) {
      PointRecord p;
      p.f = pj.at("f").get<std::string>();
      p.p = pj.at("p").get<double>();
      p.point = pj.at("point").get<std::vector<double>>();
      p.residual = number_or_inf(pj.at("residual"));
      p.lhs = number_or_inf(pj.at("lhs"));
      p.rhs = number_or_inf(pj.at("rhs"));
      r.worst_.push_back(std::move(p));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report does not match the schema: ") + e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string report_csv(const CheckReport& report) {
  std::string out = "suite,f,p,point,residual,lhs,rhs\n";
  for (const PointRecord& p : report.points()) {
    std::string pt;
    for (std::size_t i = 0; i < p.point.size(); ++i) pt += (i ? " " : "") + csv_number(p.point[i]);
    out += fmt::format("{},{},{},{},{},{},{}\n", csv_field(report.suite()), csv_field(p.f),
                       csv_number(p.p), csv_field(pt), csv_number(p.residual), csv_number(p.lhs),
                       csv_number(p.rhs));
  }
  for (const CaseRecord& c : report.cases()) {
    out += fmt::format("{},{},{},{},{},{},{}\n", csv_field(report.suite()), csv_field(c.f),
                       csv_number(c.p), "case", csv_number(c.residual),
                       c.lhs ? csv_number(*c.lhs) : "", c.rhs ? csv_number(*c.rhs) : "");
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ArgumentError("cannot write " + tmp.string());
    out << content;
    if (!out) throw ArgumentError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ArgumentError("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

}  // namespace bargmann
