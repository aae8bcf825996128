#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etype/report/run_config.hpp"
#include "etype/soliton/residuals.hpp"
#include "etype/warped/record.hpp"

namespace etype::report {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ClassifierVerdict {
  double beta = 0.0;
  double mu = 0.0;
  std::vector<std::string> tags;
  std::optional<double> c;
  bool model_available = false;
  std::string text;
};

struct Envelope {
  Command command = Command::verify;
  std::map<std::string, std::string> config;
  std::vector<soliton::ResidualReport> reports;
  std::vector<ClassifierVerdict> verdicts;
  std::vector<std::string> notes;
  /// Serialized domain objects (theorem cases, soliton types).
  std::vector<warped::KeyValueRecord> records;
  /// Command-specific scalars, e.g. the integration end point.
  std::map<std::string, double> details;
  double elapsed_seconds = 0.0;

  /// True iff every report passes.
  bool pass() const;
};

/// Envelope as JSON: version, schema_version, command, config, reports,
/// verdicts, notes, records, details, timing, pass. Key order is fixed.
std::string to_json(const Envelope& envelope);

/// %.10e; "nan"/"inf" for non-finite values.
std::string format_scientific(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

/// identity,r,residual per grid point.
CsvTable reports_to_csv(const std::vector<soliton::ResidualReport>& reports);

/// Writes to a sibling temporary file, then renames it over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace etype::report
