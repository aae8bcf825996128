#include "etype/report/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "etype/errors.hpp"
#include "etype/geometry/tensor_engine.hpp"
#include "etype/soliton/closed_form.hpp"
#include "etype/soliton/ode.hpp"
#include "etype/soliton/random_suite.hpp"
#include "etype/soliton/residuals.hpp"
#include "etype/soliton/soliton_types.hpp"
#include "etype/warped/record.hpp"

namespace etype::report {

using soliton::ReducedParams;
using soliton::ResidualReport;
using soliton::TheoremCase;
using warped::RadialField;
using warped::WarpedMetric;

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::optional<double> c_from_beta_mu(const RunConfig& cfg) {
  if (cfg.beta && cfg.mu) {
    if (*cfg.beta == 0.0) throw ConfigError("beta = 0 has no reduced form (case I)");
    return -*cfg.mu / *cfg.beta;
  }
  if (cfg.beta || cfg.mu) throw ConfigError("beta and mu must be given together");
  return std::nullopt;
}

soliton::SolitonTypeOptions type_options(const RunConfig& cfg) {
  return soliton::SolitonTypeOptions{cfg.dimension, cfg.sigma_k, cfg.nu, cfg.k};
}

const std::vector<std::string> kResidualNames{"einstein-radial", "einstein-fiber", "key1", "key2-radial",
                                              "key2-fiber",      "key3",           "key4", "scalar-curvature"};

/// Residual of the named identity as a function of r. The metric and
/// potential must outlive the returned function.
std::function<double(double)> residual_function(const std::string& name, const WarpedMetric& w,
                                                const RadialField& f, double c) {
  const ReducedParams rp{c, 1.0, true};
  if (name == "einstein-radial") return [&w, &f, rp](double r) { return soliton::einstein_type_residual(w, f, rp, r).radial; };
  if (name == "einstein-fiber") return [&w, &f, rp](double r) { return soliton::einstein_type_residual(w, f, rp, r).fiber; };
  if (name == "key1") return [&w, &f, c](double r) { return soliton::key1_residual(w, f, c, r); };
  if (name == "key2-radial") return [&w, &f, c](double r) { return soliton::key2_residual_components(w, f, c, r).radial; };
  if (name == "key2-fiber") return [&w, &f, c](double r) { return soliton::key2_residual_components(w, f, c, r).fiber; };
  if (name == "key3") return [&w, &f, c](double r) { return soliton::key3_residual(w, f, c, r); };
  if (name == "key4") return [&f, c](double r) { return soliton::key4_residual(f, c, r); };
  if (name == "scalar-curvature") return [&w](double r) { return warped::scalar_and_derivative(w, r).value; };
  throw UnknownNameError("unknown residual '" + name + "' (expected one of einstein-radial, einstein-fiber, "
                         "key1, key2-radial, key2-fiber, key3, key4, scalar-curvature)");
}

void require_grid_inside(const std::vector<double>& grid, const warped::Interval& iv, const std::string& what) {
  if (grid.front() < iv.lo - 1e-12 * std::max(1.0, std::abs(iv.lo)) ||
      grid.back() > iv.hi + 1e-12 * std::max(1.0, std::abs(iv.hi)))
    throw ConfigError("grid " + short_number(grid.front()) + ":" + short_number(grid.back()) +
                      " leaves the " + what + " interval [" + short_number(iv.lo) + ", " + short_number(iv.hi) + "]");
}

std::string summary_line(const ResidualReport& r) {
  std::ostringstream os;
  os << r.identity << ": max_abs " << format_scientific(r.max_abs) << " tol "
     << format_scientific(r.tolerance) << (r.pass ? " pass" : " FAIL");
  return os.str();
}

/// Finite-difference scalar curvature of the S^2/S^3 chart against the
/// warped closed form, at up to nine radii away from the ends.
std::optional<ResidualReport> fd_cross_check(const WarpedMetric& w, const std::vector<double>& grid, double tol) {
  const int n = w.dimension();
  if (n != 3 && n != 4) return std::nullopt;
  if (w.fiber().preset != warped::FiberPreset::round_sphere) return std::nullopt;
  const auto chart = n == 3 ? warped::FiberChart::s2_spherical : warped::FiberChart::s3_hyperspherical;
  const auto& iv = w.interval();
  const double lo = std::max(iv.lo, 0.5) + 0.1, hi = iv.hi - 0.1;
  std::vector<double> radii;
  for (double r : grid)
    if (r >= lo && r <= hi) radii.push_back(r);
  if (radii.empty()) return std::nullopt;
  if (radii.size() > 9) {
    std::vector<double> picked;
    for (int i = 0; i < 9; ++i) picked.push_back(radii[i * (radii.size() - 1) / 8]);
    radii = std::move(picked);
  }
  const auto patch = warped::to_patch(w, chart);
  auto fn = [&](double r) {
    geom::Point x(n);
    x[0] = r;
    if (n == 3) {
      x[1] = 1.1;
      x[2] = 0.4;
    } else {
      x[1] = 1.2;
      x[2] = 1.1;
      x[3] = 0.4;
    }
    const auto pack = geom::curvature(patch, x);
    return pack.scalar - warped::scalar_and_derivative(w, r).value;
  };
  return soliton::make_report("fd-scalar-curvature", radii, fn, tol);
}

void add_case_verdict_notes(Envelope& env, const std::vector<std::string>& notes) {
  env.notes.insert(env.notes.end(), notes.begin(), notes.end());
}

ClassifierVerdict verdict_for(double beta, double mu) {
  const auto cls = soliton::classify(beta, mu);
  ClassifierVerdict v;
  v.beta = beta;
  v.mu = mu;
  v.c = cls.c;
  for (auto t : cls.tags) v.tags.push_back(soliton::to_string(t));
  const auto first = cls.tags.front();
  switch (first) {
    case soliton::CaseTag::I_nonexistent:
      v.text = "Case I: trivial only";
      break;
    case soliton::CaseTag::IIA_cylinder:
    case soliton::CaseTag::IIB_euclidean:
      v.text = "Case II: cylinder (A) or complex Euclidean (B)";
      v.model_available = true;
      break;
    case soliton::CaseTag::III_nonexistent:
      v.text = "Case III: trivial only, c=" + short_number(*cls.c);
      break;
    case soliton::CaseTag::IV_rotational:
      v.text = "Case IV: rotationally symmetric model, c=" + short_number(*cls.c);
      v.model_available = true;
      break;
  }
  return v;
}

}  // namespace

TheoremCase case_from_config(const RunConfig& cfg) {
  if (cfg.case_tag.empty()) throw ConfigError("no case given (use --case)");
  const auto tag = soliton::parse_case_tag(cfg.case_tag);
  const auto from_params = c_from_beta_mu(cfg);
  if (cfg.beta && cfg.mu) {
    const auto cls = soliton::classify(*cfg.beta, *cfg.mu);
    if (std::find(cls.tags.begin(), cls.tags.end(), tag) == cls.tags.end())
      throw ConfigError("beta=" + short_number(*cfg.beta) + ", mu=" + short_number(*cfg.mu) +
                        " does not lead to case " + cfg.case_tag);
  }
  if (cfg.c && from_params && *cfg.c != *from_params) throw ConfigError("--c disagrees with -mu/beta");
  const auto conv = cfg.convention == "derivation" ? soliton::QuadraticConvention::derivation
                                                   : soliton::QuadraticConvention::statement;
  switch (tag) {
    case soliton::CaseTag::IIA_cylinder:
    case soliton::CaseTag::IIB_euclidean: {
      const double c = cfg.c.value_or(from_params.value_or(0.0));
      if (c != 0.0) throw ConfigError("case II needs c = 0");
      return tag == soliton::CaseTag::IIA_cylinder ? TheoremCase::cylinder(cfg.a, cfg.b)
                                                   : TheoremCase::euclidean(cfg.a, cfg.b, conv);
    }
    case soliton::CaseTag::IV_rotational:
      return TheoremCase::rotational(cfg.a, cfg.c.value_or(from_params.value_or(-1.0)), cfg.c1);
    default:
      return TheoremCase::nonexistent(tag);
  }
}

CommandResult run_verify(const RunConfig& cfg) {
  CommandResult res;
  Envelope& env = res.envelope;
  env.command = Command::verify;
  env.config = cfg.supplied;
  const auto grid = cfg.grid.points();

  std::optional<soliton::Model> model;
  std::optional<RadialField> file_potential;
  std::optional<WarpedMetric> file_metric;
  double c = 0.0;
  bool spline = false;

  if (!cfg.potential_file.empty()) {
    const auto rec = warped::KeyValueRecord::read_file(cfg.potential_file);
    file_potential = soliton::potential_from_record(rec);
    spline = file_potential->representation() == RadialField::Representation::sampled;
    std::optional<double> file_c;
    if (file_potential->form() == "case-IV-rotational") file_c = file_potential->parameters().at(3);
    c = cfg.c.value_or(c_from_beta_mu(cfg).value_or(file_c.value_or(0.0)));
    require_grid_inside(grid, file_potential->interval(), "potential");
    file_metric.emplace(warped::WarpingProfile::from_potential(*file_potential, c),
                        warped::FiberSpec::round_sphere(cfg.dimension - 1));
    env.records.push_back(warped::potential_to_record(*file_potential));
  } else {
    const auto tc = case_from_config(cfg);
    model = soliton::build_model(tc, cfg.dimension, warped::Interval{cfg.grid.start, cfg.grid.stop});
    c = model->c;
    add_case_verdict_notes(env, model->notes);
    env.records.push_back(soliton::to_record(tc));
  }
  const WarpedMetric& w = model ? model->metric : *file_metric;
  const RadialField& f = model ? model->potential : *file_potential;

  const double identity_tol = spline ? cfg.tol.spline : cfg.tol.algebraic;
  for (const std::string name : {"einstein-radial", "einstein-fiber"})
    env.reports.push_back(soliton::make_report(name, grid, residual_function(name, w, f, c), cfg.tol.algebraic));
  for (const std::string name : {"key1", "key2-radial", "key2-fiber", "key3", "key4"})
    env.reports.push_back(soliton::make_report(name, grid, residual_function(name, w, f, c), identity_tol));
  if (spline)
    env.notes.push_back("key4 vanishes only where psi'' = 0; a generic spline potential is expected to fail it");

  // Spline potentials leave psi'' only piecewise linear, below what the stencil needs.
  if (spline)
    env.notes.push_back("finite-difference curvature cross-check skipped for a sampled potential");
  else if (auto fd = fd_cross_check(w, grid, cfg.tol.fd))
    env.reports.push_back(std::move(*fd));

  if (!cfg.soliton_type.empty()) {
    const auto entry = soliton::lookup(cfg.soliton_type, type_options(cfg));
    env.records.push_back(soliton::to_record(entry));
    const auto params = entry.params();
    const auto rp = soliton::reduce(params);
    if (std::abs(rp.c - c) > 1e-14 * std::max(1.0, std::abs(c)))
      throw ConfigError(cfg.soliton_type + " has c = " + short_number(rp.c) + " but the model has c = " +
                        short_number(c));
    std::vector<double> lambda(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      lambda[i] = soliton::lambda_recovery(rp, params.rho(), w, f, grid[i]);
    env.details["lambda_min"] = *std::min_element(lambda.begin(), lambda.end());
    env.details["lambda_max"] = *std::max_element(lambda.begin(), lambda.end());
    if (params.lambda_mode() == soliton::LambdaMode::constant) {
      const double l0 = lambda.front();
      env.reports.push_back(soliton::make_report(
          "lambda-constancy", grid,
          [&](double r) { return soliton::lambda_recovery(rp, params.rho(), w, f, r) - l0; }, cfg.tol.lambda));
    }
  }

  res.csv = reports_to_csv(env.reports);
  for (const auto& r : env.reports) res.text += summary_line(r) + "\n";
  for (const auto& n : env.notes) res.text += "note: " + n + "\n";
  res.text += std::string(env.pass() ? "verify: pass" : "verify: FAIL") + "\n";
  return res;
}

CommandResult run_classify(const RunConfig& cfg) {
  if (!cfg.beta || !cfg.mu) throw ConfigError("classify needs beta and mu");
  CommandResult res;
  res.envelope.command = Command::classify;
  res.envelope.config = cfg.supplied;
  const auto v = verdict_for(*cfg.beta, *cfg.mu);
  res.envelope.verdicts.push_back(v);
  res.text = v.text + "\n";
  std::string tags;
  for (const auto& t : v.tags) tags += (tags.empty() ? "" : ";") + t;
  res.csv = CsvTable{{"beta", "mu", "tags", "c", "model_available"},
                     {{format_scientific(v.beta), format_scientific(v.mu), tags,
                       v.c ? format_scientific(*v.c) : "", v.model_available ? "1" : "0"}}};
  return res;
}

CommandResult run_integrate(const RunConfig& cfg) {
  CommandResult res;
  Envelope& env = res.envelope;
  env.command = Command::integrate;
  env.config = cfg.supplied;

  std::optional<TheoremCase> tc;
  if (!cfg.case_tag.empty()) {
    tc = case_from_config(cfg);
    if (!soliton::is_constructive(tc->tag))
      throw NoModelError("no closed form for case " + cfg.case_tag);
  }
  double c;
  if (tc) c = tc->c;
  else if (cfg.c) c = *cfg.c;
  else if (auto p = c_from_beta_mu(cfg)) c = *p;
  else throw ConfigError("integrate needs --c, --beta/--mu or --case");

  const double r0 = cfg.grid.start;
  soliton::OdeState init;
  if (cfg.init) {
    init = {(*cfg.init)[0], (*cfg.init)[1], (*cfg.init)[2]};
  } else if (tc) {
    const auto jet = soliton::closed_form_potential(*tc, r0);
    init = {jet.f, jet.d1, jet.d2};
  } else {
    throw ConfigError("integrate needs --init F,dF,d2F or --case");
  }

  const auto result = soliton::integrate_soliton_ode(c, init, warped::Interval{cfg.grid.start, cfg.grid.stop});
  env.details["end_r"] = result.end_r;
  env.details["domain_exit"] = result.domain_exit ? 1.0 : 0.0;
  env.details["accepted_steps"] = static_cast<double>(result.accepted_steps);
  env.details["rejected_steps"] = static_cast<double>(result.rejected_steps);
  if (result.domain_exit)
    env.notes.push_back("F' reached 0 at r = " + format_scientific(result.end_r) + "; integration halted");

  std::vector<double> grid;
  for (double r : cfg.grid.points())
    if (r <= result.end_r) grid.push_back(r);
  if (grid.empty()) grid.push_back(r0);

  std::function<double(double)> closed;
  if (tc) {
    closed = [tcv = *tc](double r) { return soliton::closed_form_potential(tcv, r).f; };
  } else if (c == 0.0) {
    closed = [init, r0](double r) {
      const double d = r - r0;
      return init.f + init.d1 * d + 0.5 * init.d2 * d * d;
    };
  }

  res.csv.header = {"r", "F", "dF", "d2F"};
  if (closed) res.csv.header.push_back("delta");
  for (double r : grid) {
    const auto jet = result.field.evaluate(r);
    std::vector<std::string> row{format_scientific(r), format_scientific(jet.f), format_scientific(jet.d1),
                                 format_scientific(jet.d2)};
    if (closed) row.push_back(format_scientific(jet.f - closed(r)));
    res.csv.rows.push_back(std::move(row));
  }
  if (closed) {
    const auto& field = result.field;
    env.reports.push_back(soliton::make_report(
        "ode-closed-form-delta", grid, [&](double r) { return field.evaluate(r).f - closed(r); }, cfg.tol.ode));
  }

  std::ostringstream os;
  os << "integrated c=" << short_number(c) << " from r=" << short_number(r0) << " to r="
     << format_scientific(result.end_r) << " in " << result.accepted_steps << " steps";
  if (result.domain_exit) os << " (domain exit: F' crossed 0)";
  res.text = os.str() + "\n";
  for (const auto& r : env.reports) res.text += summary_line(r) + "\n";
  return res;
}

CommandResult run_sweep(const RunConfig& cfg) {
  if (cfg.residual.empty()) throw ConfigError("sweep needs --residual");
  if (std::find(kResidualNames.begin(), kResidualNames.end(), cfg.residual) == kResidualNames.end())
    throw UnknownNameError("unknown residual '" + cfg.residual + "'");
  CommandResult res;
  Envelope& env = res.envelope;
  env.command = Command::sweep;
  env.config = cfg.supplied;
  const bool quantity = cfg.residual == "scalar-curvature";
  const double inf = std::numeric_limits<double>::infinity();

  if (cfg.sweep_param == "suite") {
    soliton::RandomSuiteOptions opt;
    opt.count = static_cast<std::size_t>(cfg.suite_count);
    opt.seed = cfg.seed;
    const auto suite = soliton::random_potential_suite(opt);
    const GridSpec g = cfg.supplied.count("grid") ? cfg.grid : GridSpec{opt.interval.lo, opt.interval.hi, 50};
    const auto grid = g.points();
    require_grid_inside(grid, opt.interval, "suite");
    res.csv.header = {"instance", "c", "r", "residual"};
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const auto& inst = suite[i];
      const WarpedMetric w(warped::WarpingProfile::from_potential(inst.potential, inst.c),
                           warped::FiberSpec::round_sphere(cfg.dimension - 1));
      const double tol = quantity ? inf
                         : cfg.residual.rfind("einstein", 0) == 0 ? cfg.tol.algebraic
                                                                   : cfg.tol.spline;
      auto rep = soliton::make_report(cfg.residual + "[instance=" + std::to_string(i) + "]", grid,
                                      residual_function(cfg.residual, w, inst.potential, inst.c), tol);
      for (std::size_t j = 0; j < grid.size(); ++j)
        res.csv.rows.push_back({std::to_string(i), format_scientific(inst.c), format_scientific(grid[j]),
                                format_scientific(rep.residuals[j])});
      env.reports.push_back(std::move(rep));
    }
  } else {
    static const std::vector<std::string> params{"a", "b", "c1", "c"};
    if (std::find(params.begin(), params.end(), cfg.sweep_param) == params.end())
      throw ConfigError("sweep-param must be one of a, b, c1, c, suite");
    if (!cfg.param_grid) throw ConfigError("sweep needs --param-grid start:stop:count");
    const auto grid = cfg.grid.points();
    res.csv.header = {cfg.sweep_param, "r", "residual"};
    for (double value : cfg.param_grid->points()) {
      RunConfig point = cfg;
      if (cfg.sweep_param == "a") point.a = value;
      if (cfg.sweep_param == "b") point.b = value;
      if (cfg.sweep_param == "c1") point.c1 = value;
      if (cfg.sweep_param == "c") point.c = value;
      const auto tc = case_from_config(point);
      const auto model = soliton::build_model(tc, cfg.dimension, warped::Interval{cfg.grid.start, cfg.grid.stop});
      auto rep = soliton::make_report(cfg.residual + "[" + cfg.sweep_param + "=" + short_number(value) + "]", grid,
                                      residual_function(cfg.residual, model.metric, model.potential, model.c),
                                      quantity ? inf : cfg.tol.algebraic);
      for (std::size_t j = 0; j < grid.size(); ++j)
        res.csv.rows.push_back({format_scientific(value), format_scientific(grid[j]),
                                format_scientific(rep.residuals[j])});
      env.reports.push_back(std::move(rep));
    }
  }
  for (const auto& r : env.reports) res.text += summary_line(r) + "\n";
  return res;
}

CommandResult run_table(const RunConfig& cfg) {
  CommandResult res;
  res.envelope.command = Command::table;
  res.envelope.config = cfg.supplied;
  res.csv.header = {"name", "alpha", "beta", "mu", "rho", "lambda"};
  for (const auto& e : soliton::soliton_type_table(type_options(cfg))) {
    std::string lambda = soliton::to_string(e.lambda.kind);
    if (e.lambda.kind == soliton::LambdaSemantics::Kind::sigma_k_minus_nu)
      lambda = "sigma_" + std::to_string(e.lambda.k) + " - " + short_number(e.lambda.nu);
    res.csv.rows.push_back({e.name, short_number(e.alpha), short_number(e.beta), short_number(e.mu),
                            short_number(e.rho), lambda});
    res.envelope.records.push_back(soliton::to_record(e));
    res.text += e.name + ": (alpha, beta, mu, rho) = (" + short_number(e.alpha) + ", " + short_number(e.beta) +
                ", " + short_number(e.mu) + ", " + short_number(e.rho) + "), lambda " + lambda + "\n";
  }
  return res;
}

CommandResult run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::verify: return run_verify(cfg);
    case Command::classify: return run_classify(cfg);
    case Command::integrate: return run_integrate(cfg);
    case Command::sweep: return run_sweep(cfg);
    case Command::table: return run_table(cfg);
  }
  throw ConfigError("unknown command");
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CommandResult res;
  try {
    res = run_command(cfg);
  } catch (const StiffnessError& e) {
    err << "error: " << e.what() << " (last good r = " << format_scientific(e.last_good_r()) << ")\n";
    return kExitIdentityFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  res.envelope.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const bool tabular = cfg.command == Command::integrate || cfg.command == Command::sweep;
  const OutputFormat fmt = cfg.format.value_or(tabular ? OutputFormat::csv : OutputFormat::json);
  const std::string rendered = fmt == OutputFormat::json ? to_json(res.envelope) : res.csv.to_string();
  const bool text_primary =
      (cfg.command == Command::classify || cfg.command == Command::table) && !cfg.format && cfg.out.empty();

  try {
    if (!cfg.out.empty()) {
      write_atomic(cfg.out, rendered);
      out << res.text;
    } else if (text_primary) {
      out << res.text;
    } else {
      out << rendered;
      err << res.text;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return res.envelope.pass() ? kExitPass : kExitIdentityFailure;
}

}  // namespace etype::report
