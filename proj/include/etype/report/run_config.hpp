#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace etype::report {

enum class Command { verify, classify, integrate, sweep, table };
enum class OutputFormat { csv, json };

std::string to_string(Command command);
Command parse_command(const std::string& text);

struct GridSpec {
  double start = 0.1;
  double stop = 5.0;
  int count = 100;

  std::vector<double> points() const;
};

/// "start:stop:count". Throws ConfigError.
GridSpec parse_grid(const std::string& text);
std::string to_string(const GridSpec& grid);

struct Tolerances {
  double algebraic = 1e-10;
  double spline = 1e-6;
  double fd = 1e-4;
  double ode = 1e-8;
  double lambda = 1e-8;
};

/// Flat settings shared by every command. Keys mirror the long command-line
/// flags without the leading dashes.
struct RunConfig {
  Command command = Command::verify;
  int dimension = 4;

  std::optional<double> beta;
  std::optional<double> mu;
  double rho = 0.0;
  std::string soliton_type;
  double k = 1.0;       // quasi-Yamabe constant
  int sigma_k = 1;      // k-Yamabe index
  double nu = 0.0;

  std::string case_tag;
  double a = 1.0;
  double b = 0.0;
  double c1 = 1.0;
  std::optional<double> c;
  std::string convention = "statement";

  GridSpec grid;
  Tolerances tol;

  std::optional<std::array<double, 3>> init;  // integrate: F, F', F'' at grid.start

  std::string residual;
  std::string sweep_param;
  std::optional<GridSpec> param_grid;
  std::uint64_t seed = 20240611;
  int suite_count = 60;

  std::string potential_file;
  std::string out;
  std::optional<OutputFormat> format;

  /// Echo of the settings that were supplied, in key order.
  std::map<std::string, std::string> supplied;

  /// Grid count >= 2, start > 0, tolerances positive, dimension >= 3.
  void validate() const;
};

/// Known setting keys.
const std::vector<std::string>& config_keys();

/// Builds a config from key-value settings: entries from a config file first,
/// then command-line entries, which win. Unknown keys and malformed values
/// throw ConfigError.
RunConfig make_run_config(const std::map<std::string, std::string>& file_entries,
                          const std::map<std::string, std::string>& cli_entries);

/// Reads a flat "key = value" config file into a map. Throws ConfigError.
std::map<std::string, std::string> read_config_file(const std::string& path);

}  // namespace etype::report
