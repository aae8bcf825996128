#include "etype/report/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "etype/errors.hpp"

namespace etype::report {

using json = nlohmann::ordered_json;

bool Envelope::pass() const {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(number(v));
  return arr;
}

}  // namespace

std::string to_json(const Envelope& env) {
  json j;
  j["version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["command"] = to_string(env.command);
  json cfg = json::object();
  for (const auto& [k, v] : env.config) cfg[k] = v;
  j["config"] = cfg;

  json reports = json::array();
  for (const auto& r : env.reports) {
    json jr;
    jr["identity"] = r.identity;
    jr["phi_divided_by_beta"] = true;
    jr["tolerance"] = number(r.tolerance);
    jr["max_abs"] = number(r.max_abs);
    jr["rms"] = number(r.rms);
    jr["pass"] = r.pass;
    jr["grid"] = numbers(r.grid);
    jr["residuals"] = numbers(r.residuals);
    reports.push_back(jr);
  }
  j["reports"] = reports;

  json verdicts = json::array();
  for (const auto& v : env.verdicts) {
    json jv;
    jv["beta"] = v.beta;
    jv["mu"] = v.mu;
    jv["tags"] = v.tags;
    jv["c"] = v.c ? number(*v.c) : json(nullptr);
    jv["model_available"] = v.model_available;
    jv["text"] = v.text;
    verdicts.push_back(jv);
  }
  j["verdicts"] = verdicts;
  j["notes"] = env.notes;
  json records = json::array();
  for (const auto& rec : env.records) {
    json jr = json::object();
    for (const auto& [k, v] : rec.entries()) jr[k] = v;
    records.push_back(jr);
  }
  j["records"] = records;
  json details = json::object();
  for (const auto& [k, v] : env.details) details[k] = number(v);
  j["details"] = details;
  j["timing"] = {{"elapsed_seconds", env.elapsed_seconds}};
  j["pass"] = env.pass();
  return j.dump(2) + "\n";
}

std::string format_scientific(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

std::string CsvTable::to_string() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

CsvTable reports_to_csv(const std::vector<soliton::ResidualReport>& reports) {
  CsvTable t{{"identity", "r", "residual"}, {}};
  for (const auto& rep : reports)
    for (std::size_t i = 0; i < rep.grid.size(); ++i)
      t.rows.push_back({rep.identity, format_scientific(rep.grid[i]), format_scientific(rep.residuals[i])});
  return t;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ConfigError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot move report into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace etype::report
