#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "etype/errors.hpp"
#include "etype/report/commands.hpp"
#include "etype/report/run_config.hpp"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

const std::vector<Flag> kFlags{
    {"case", "theorem case: I, II-A, II-B, III, IV"},
    {"a", "case parameter a"},
    {"b", "case parameter b"},
    {"c1", "case parameter c1"},
    {"c", "reduced constant c = -mu/beta"},
    {"convention", "quadratic convention for II-B: statement | derivation"},
    {"beta", "beta"},
    {"mu", "mu"},
    {"rho", "rho"},
    {"dim", "dimension n"},
    {"soliton-type", "soliton type name, e.g. 'gradient Yamabe soliton'"},
    {"k", "quasi-Yamabe constant k"},
    {"sigma-k", "k-Yamabe index"},
    {"nu", "k-Yamabe constant nu"},
    {"grid", "radial grid start:stop:count"},
    {"tol-algebraic", "tolerance for closed-form identities"},
    {"tol-spline", "tolerance for spline-sampled identities"},
    {"tol-fd", "tolerance for finite-difference cross-checks"},
    {"tol-ode", "tolerance for ODE against closed forms"},
    {"tol-lambda", "tolerance for lambda constancy"},
    {"init", "initial data F,dF,d2F at the grid start"},
    {"residual", "residual name for sweep"},
    {"sweep-param", "swept parameter: a, b, c1, c or suite"},
    {"param-grid", "parameter grid start:stop:count"},
    {"seed", "random suite seed"},
    {"count", "random suite size"},
    {"potential-file", "potential record file"},
    {"out", "output path (written atomically)"},
    {"format", "csv | json"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient Einstein-type warped product verifier"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file; command-line values win");

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string pos_beta, pos_mu;

  const std::vector<std::pair<const char*, const char*>> commands{
      {"verify", "evaluate every identity on a model or a potential file"},
      {"classify", "classify (beta, mu)"},
      {"integrate", "integrate the soliton ODE"},
      {"sweep", "evaluate one residual over a parameter grid"},
      {"table", "print the soliton type table"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    subs[name] = sub;
    for (const auto& f : kFlags) {
      const std::string key = std::string(name) + ":" + f.name;
      options[key] = sub->add_option(std::string("--") + f.name, values[key], f.help);
    }
  }
  subs["classify"]->add_option("beta_pos", pos_beta, "beta")->allow_extra_args(false);
  subs["classify"]->add_option("mu_pos", pos_mu, "mu");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return etype::report::kExitConfigError;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  std::map<std::string, std::string> cli;
  cli["command"] = command;
  for (const auto& f : kFlags) {
    const std::string key = command + ":" + f.name;
    if (options[key]->count() > 0) cli[f.name] = values[key];
  }
  if (!pos_beta.empty()) cli["beta"] = pos_beta;
  if (!pos_mu.empty()) cli["mu"] = pos_mu;

  try {
    std::map<std::string, std::string> file;
    if (!config_path.empty()) {
      file = etype::report::read_config_file(config_path);
      if (auto it = file.find("command"); it != file.end() && it->second != command)
        throw etype::ConfigError("config file is for command '" + it->second + "'");
    }
    const auto cfg = etype::report::make_run_config(file, cli);
    return etype::report::execute(cfg, std::cout, std::cerr);
  } catch (const etype::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return etype::report::kExitConfigError;
  }
}
