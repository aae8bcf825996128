#include "etype/report/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "etype/errors.hpp"
#include "etype/warped/record.hpp"

namespace etype::report {

namespace {

double to_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for " + key + ": '" + text + "'");
  }
}

long long to_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("invalid integer for " + key + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::verify: return "verify";
    case Command::classify: return "classify";
    case Command::integrate: return "integrate";
    case Command::sweep: return "sweep";
    case Command::table: return "table";
  }
  return "unknown";
}

Command parse_command(const std::string& text) {
  for (Command c : {Command::verify, Command::classify, Command::integrate, Command::sweep, Command::table})
    if (to_string(c) == text) return c;
  throw ConfigError("unknown command: " + text);
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = start + (stop - start) * i / (count - 1);
  out.back() = stop;
  return out;
}

GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("grid must be start:stop:count, got '" + text + "'");
  GridSpec g;
  g.start = to_double("grid", parts[0]);
  g.stop = to_double("grid", parts[1]);
  g.count = static_cast<int>(to_integer("grid", parts[2]));
  if (g.count < 2) throw ConfigError("grid count must be at least 2");
  if (!(g.stop > g.start)) throw ConfigError("grid stop must exceed start");
  return g;
}

std::string to_string(const GridSpec& g) {
  return warped::format_double(g.start) + ":" + warped::format_double(g.stop) + ":" + std::to_string(g.count);
}

void RunConfig::validate() const {
  if (grid.count < 2) throw ConfigError("grid count must be at least 2");
  if (!(grid.start > 0.0)) throw ConfigError("grid start must be positive");
  if (!(grid.stop > grid.start)) throw ConfigError("grid stop must exceed start");
  for (double t : {tol.algebraic, tol.spline, tol.fd, tol.ode, tol.lambda})
    if (!(t > 0.0)) throw ConfigError("tolerances must be positive");
  if (dimension < 3) throw ConfigError("dimension must be at least 3");
  if (suite_count < 1) throw ConfigError("count must be positive");
  if (param_grid && param_grid->count < 2) throw ConfigError("param-grid count must be at least 2");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "command", "dim",      "beta",     "mu",       "rho",          "soliton-type", "k",
      "sigma-k", "nu",       "case",     "a",        "b",            "c1",           "c",
      "convention", "grid", "tol-algebraic", "tol-spline", "tol-fd", "tol-ode", "tol-lambda", "init",
      "residual", "sweep-param", "param-grid", "seed", "count", "potential-file", "out", "format"};
  return keys;
}

RunConfig make_run_config(const std::map<std::string, std::string>& file_entries,
                          const std::map<std::string, std::string>& cli_entries) {
  std::map<std::string, std::string> merged = file_entries;
  for (const auto& [k, v] : cli_entries) merged[k] = v;

  const auto& keys = config_keys();
  RunConfig cfg;
  for (const auto& [key, value] : merged) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown setting: " + key);
    if (key == "command") cfg.command = parse_command(value);
    else if (key == "dim") cfg.dimension = static_cast<int>(to_integer(key, value));
    else if (key == "beta") cfg.beta = to_double(key, value);
    else if (key == "mu") cfg.mu = to_double(key, value);
    else if (key == "rho") cfg.rho = to_double(key, value);
    else if (key == "soliton-type") cfg.soliton_type = value;
    else if (key == "k") cfg.k = to_double(key, value);
    else if (key == "sigma-k") cfg.sigma_k = static_cast<int>(to_integer(key, value));
    else if (key == "nu") cfg.nu = to_double(key, value);
    else if (key == "case") cfg.case_tag = value;
    else if (key == "a") cfg.a = to_double(key, value);
    else if (key == "b") cfg.b = to_double(key, value);
    else if (key == "c1") cfg.c1 = to_double(key, value);
    else if (key == "c") cfg.c = to_double(key, value);
    else if (key == "convention") {
      if (value != "statement" && value != "derivation")
        throw ConfigError("convention must be statement or derivation");
      cfg.convention = value;
    } else if (key == "grid") cfg.grid = parse_grid(value);
    else if (key == "tol-algebraic") cfg.tol.algebraic = to_double(key, value);
    else if (key == "tol-spline") cfg.tol.spline = to_double(key, value);
    else if (key == "tol-fd") cfg.tol.fd = to_double(key, value);
    else if (key == "tol-ode") cfg.tol.ode = to_double(key, value);
    else if (key == "tol-lambda") cfg.tol.lambda = to_double(key, value);
    else if (key == "init") {
      const auto parts = split(value, ',');
      if (parts.size() != 3) throw ConfigError("init must be F,dF,d2F");
      cfg.init = std::array<double, 3>{to_double(key, parts[0]), to_double(key, parts[1]),
                                       to_double(key, parts[2])};
    } else if (key == "residual") cfg.residual = value;
    else if (key == "sweep-param") cfg.sweep_param = value;
    else if (key == "param-grid") cfg.param_grid = parse_grid(value);
    else if (key == "seed") {
      const long long s = to_integer(key, value);
      if (s < 0) throw ConfigError("seed must be nonnegative");
      cfg.seed = static_cast<std::uint64_t>(s);
    } else if (key == "count") cfg.suite_count = static_cast<int>(to_integer(key, value));
    else if (key == "potential-file") cfg.potential_file = value;
    else if (key == "out") cfg.out = value;
    else if (key == "format") {
      if (value == "csv") cfg.format = OutputFormat::csv;
      else if (value == "json") cfg.format = OutputFormat::json;
      else throw ConfigError("format must be csv or json");
    }
  }
  cfg.supplied = std::move(merged);
  cfg.validate();
  return cfg;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  try {
    const auto rec = warped::KeyValueRecord::read_file(path);
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : rec.entries()) out[k] = v;
    return out;
  } catch (const ParseError& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

}  // namespace etype::report
