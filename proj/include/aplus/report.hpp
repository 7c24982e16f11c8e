#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aplus/norms.hpp"

namespace aplus {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kWorkbenchVersion = "0.1.0";

struct SuiteConfig {
  std::string suite = "all";  // thm1 | thm2 | counterexample | bflq | all
  double p = 2.0;
  double A = 0.0;
  std::complex<double> c1 = 0.0;
  double cr = 4.0;
  double cr2 = 1.0;
  int r = 2;
  int n_max = 64;
  std::size_t order = 1 << 16;
  /// Relative stabilization tolerance of the boundary quadrature.
  std::optional<double> tol;
  int workers = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::optional<std::filesystem::path> csv_dir;
};

/// Throws InvalidArgument describing the first invalid field.
void validate(const SuiteConfig& cfg);

enum class Verdict { pass, fail, evidence, inconclusive };
std::string to_string(Verdict v);

struct Record {
  std::string id;
  /// The formula or claim the check measures, or "plumbing".
  std::string anchor;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json measured = nlohmann::json::object();
  nlohmann::json predicted;
  nlohmann::json tolerance;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

struct NamedTable {
  std::string name;
  NormTable table;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<Record> records;
  std::vector<NamedTable> tables;

  int count(Verdict v) const;
  /// 1 if any record failed, else 2 if any is inconclusive, else 0.
  int exit_code() const;
  nlohmann::json to_json() const;
};

VerificationReport run_suite(const SuiteConfig& cfg);

void write_json(const VerificationReport& report, const std::filesystem::path& path);

/// One CSV row of a norm table; empty cells read back as nullopt.
struct CsvRow {
  int N = 0;
  double aplus_truncated = 0.0;
  std::optional<double> aplus_certified;
  std::optional<double> arclength_measured;
  std::optional<double> arclength_predicted;
  std::optional<double> rel_err;
  bool operator==(const CsvRow&) const = default;
};

inline constexpr const char* kCsvHeader =
    "N,aplus_truncated,aplus_certified,arclength_measured,arclength_predicted,rel_err";

std::vector<CsvRow> csv_rows(const NormTable& table);
/// Shortest round-trip decimal representation of every value.
std::string to_csv(const NormTable& table);
std::vector<CsvRow> parse_csv(const std::string& text);
/// Writes <dir>/<table name>.csv for every table; returns the paths.
std::vector<std::filesystem::path> write_csv(const VerificationReport& report, const std::filesystem::path& dir);

}  // namespace aplus
