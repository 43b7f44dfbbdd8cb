#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bargmann {

inline constexpr int kReportSchemaVersion = 1;

/// One (function, p) case of a suite.
struct CaseRecord {
  std::string f;
  double p = 0.0;
  double residual = 0.0;
  bool pass = true;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::string note;
};

/// One evaluated point (kept for the per-point CSV and the worst list).
struct PointRecord {
  std::string f;
  double p = 0.0;
  std::vector<double> point;
  double residual = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Result of a verification suite. Every recorded residual is compared with
/// the suite tolerance; a violation is a residual above it, so
/// violations() == 0 exactly when max_residual() <= tolerance.
class CheckReport {
 public:
  static constexpr std::size_t kWorstKept = 10;

  CheckReport(std::string suite, double tolerance);

  const std::string& suite() const { return suite_; }
  double tolerance() const { return tolerance_; }
  const std::string& grid() const { return grid_; }
  bool complete() const { return complete_; }
  double max_residual() const { return max_residual_; }
  int violations() const { return violations_; }
  bool passed() const { return complete_ && violations_ == 0; }
  const std::vector<CaseRecord>& cases() const { return cases_; }
  const std::vector<PointRecord>& points() const { return points_; }
  const std::vector<PointRecord>& worst() const { return worst_; }
  const nlohmann::ordered_json& config() const { return config_; }

  void set_grid(std::string grid) { grid_ = std::move(grid); }
  void set_config(nlohmann::ordered_json config) { config_ = std::move(config); }
  /// Marks the report incomplete (a case raised an error) with a reason.
  void mark_incomplete(const std::string& reason);
  const std::vector<std::string>& errors() const { return errors_; }

  /// Records a point; keep_row=false counts it without storing a CSV row.
  void add_point(PointRecord rec, bool keep_row = true);
  /// Records a case; its pass flag is derived from the residual.
  void add_case(CaseRecord rec);
  /// Boolean sub-check: a failure counts as residual 2 x tolerance.
  void add_flag(const std::string& f, double p, bool ok, const std::string& note);

  /// Merges another report's records into this one.
  void absorb(const CheckReport& other);

  nlohmann::ordered_json to_json() const;
  static CheckReport from_json(const nlohmann::ordered_json& j);

 private:
  void note_residual(double r);

  std::string suite_;
  double tolerance_;
  std::string grid_;
  bool complete_ = true;
  double max_residual_ = 0.0;
  int violations_ = 0;
  std::vector<CaseRecord> cases_;
  std::vector<PointRecord> points_;
  std::vector<PointRecord> worst_;
  std::vector<std::string> errors_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
};

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
/// Shortest-round-trip-safe fixed formatting: 17 significant digits, '.' decimal.
std::string csv_number(double v);

/// Per-point CSV: suite,f,p,point,residual,lhs,rhs; one row per recorded
/// point, then one row per case with point = "case".
std::string report_csv(const CheckReport& report);

/// Writes `content` to `path` through a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace bargmann
