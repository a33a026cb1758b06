#include "qfc/cli.hpp"

#include "qfc/error.hpp"
#include "qfc/thermo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qfc::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kHalfPi = std::numbers::pi / 2;

// Writes through `fn` to the file at `path`, or to `fallback` when path is empty.
int emit(const std::string& path, std::ostream& fallback, std::ostream& err,
         const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(fallback);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << path << "\n";
    return kExitUsage;
  }
  fn(file);
  return kExitOk;
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json("undefined");
}

ordered_json params_json(const ProtocolParams& p) {
  return {{"eps_s", p.eps_s}, {"eps_a", p.eps_a}, {"phi", p.phi}, {"temperature", p.temperature}};
}

ordered_json marginal_json(const DensityMatrix& rho) {
  const Eigen::Vector3d b = bloch_vector(rho);
  return {{"bloch", {b.x(), b.y(), b.z()}},
          {"purity", rho.purity()},
          {"entropy", vn_entropy(rho)}};
}

ordered_json stage_json(const DensityMatrix& joint, const Marginals& m) {
  return {{"joint_entropy", vn_entropy(joint)},
          {"s", marginal_json(m.s)},
          {"a", marginal_json(m.a)}};
}

ordered_json trace_json(const ProtocolTrace& t) {
  return {{"initial", stage_json(t.rho0, t.initial)},
          {"measured", stage_json(t.rho_m, t.measured)},
          {"final", stage_json(t.rho_f, t.final)},
          {"reset", stage_json(t.rho_reset, t.reset)}};
}

ordered_json thermo_json(const ThermoReport& r) {
  return {{"work_measurement", r.work_measurement},
          {"work_feedback", r.work_feedback},
          {"heat_reset", r.heat_reset},
          {"delta_e_system", r.delta_e_system},
          {"entropy_reduction", r.entropy_reduction},
          {"cooling_load", r.cooling_load},
          {"total_work", r.total_work},
          {"cop", optional_number(r.cop)},
          {"eta", optional_number(r.eta)},
          {"chi", optional_number(r.chi)},
          {"reversible_limit", r.reversible_limit},
          {"in_cooling_window", r.in_cooling_window},
          {"work_extracting_feedback", r.work_extracting_feedback},
          {"phi_crit", r.phi_crit.phi},
          {"phi_crit_degenerate", r.phi_crit.degenerate}};
}

ordered_json basis_json(const std::optional<MeasurementBasis>& b) {
  if (!b) return nullptr;
  const auto n = b->axis();
  return {{"polar", b->polar}, {"azimuth", b->azimuth}, {"axis", {n[0], n[1], n[2]}}};
}

ordered_json correlations_json(const CorrelationReport& c) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  return {{"concurrence", c.concurrence},
          {"eof", c.eof},
          {"mutual_info", c.mutual_info},
          {"discord_a", opt(c.discord_a)},
          {"discord_s", opt(c.discord_s)},
          {"discord_analytic", c.discord_analytic},
          {"classical_a", opt(c.classical_a)},
          {"basis_a", basis_json(c.basis_a)},
          {"basis_s", basis_json(c.basis_s)}};
}

double thermal_entropy_closed_form(double eps) {
  return 0.5 * std::log(4.0 / (1.0 - eps * eps)) - eps * std::atanh(eps);
}

struct Pair {
  std::string name;
  double closed_form;
  double oracle;
};

// Closed form vs matrix value for every quantity reported by `run`.
std::vector<Pair> oracle_pairs(const ProtocolParams& p, const ProtocolTrace& trace,
                               const ThermoReport& r) {
  const ThermoOracle o = thermo_from_matrices(trace, energy_model(p));
  return {
      {"entropy_initial_s", thermal_entropy_closed_form(p.eps_s), vn_entropy(trace.initial.s)},
      {"entropy_initial_a", thermal_entropy_closed_form(p.eps_a), vn_entropy(trace.initial.a)},
      {"entropy_reduction", r.entropy_reduction, o.entropy_reduction},
      {"work_measurement", r.work_measurement, o.work_measurement},
      {"work_feedback", r.work_feedback, o.work_feedback},
      {"heat_reset", r.heat_reset, o.heat_reset},
      {"delta_e_system", r.delta_e_system, o.delta_e_system},
      {"total_work", r.total_work, o.total_work},
      {"purity_final_s", 0.5 * (1.0 + p.eps_a * p.eps_a), trace.final.s.purity()},
      {"mutual_info", mutual_information_analytic(p), mutual_information(trace.rho_m)},
  };
}

std::string bool_field(bool b) { return b ? "true" : "false"; }

std::string optional_field(const std::optional<double>& v) { return v ? format_float(*v) : ""; }

bool names_option(const std::string& arg, const std::string& flag) {
  return arg == flag || arg.rfind(flag + "=", 0) == 0;
}

// Replaces `--config FILE` after the subcommand by the file's key = value
// pairs, spliced in front of the command-line arguments. Keys also given on
// the command line are dropped, so flags override the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  if (args.size() < 2) return args;
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return args;
  if (CLI::detail::check_path(path.c_str()) != CLI::detail::path_type::file) {
    throw CLI::FileError::Missing(path);
  }
  std::vector<std::string> out{args[0], args[1]};
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    std::string name = item.name;
    std::replace(name.begin(), name.end(), '_', '-');
    const std::string flag = "--" + name;
    if (std::any_of(rest.begin(), rest.end(),
                    [&](const std::string& a) { return names_option(a, flag); })) {
      continue;
    }
    std::string value;
    for (std::size_t k = 0; k < item.inputs.size(); ++k) value += (k ? "," : "") + item.inputs[k];
    out.push_back(flag + "=" + value);
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

const std::string& csv_header() {
  static const std::string header =
      "eps_s,eps_a,phi,T,P,W,Q,cop,eta,chi,in_cooling_window,work_extracting,discord,"
      "mutual_info,concurrence,eof";
  return header;
}

std::string format_float(double v) {
  if (v == 0.0) v = 0.0;  // folds -0 into +0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_row(double eps_s, double temperature, const CurvePoint& pt) {
  if (!pt.correlations) throw DomainError("csv_row needs correlation quantities");
  const ThermoReport& t = pt.thermo;
  const CorrelationReport& c = *pt.correlations;
  std::ostringstream row;
  row << format_float(eps_s) << ',' << format_float(pt.eps_a) << ',' << format_float(pt.phi) << ','
      << format_float(temperature) << ',' << format_float(t.cooling_load) << ','
      << format_float(t.total_work) << ',' << format_float(t.heat_reset) << ','
      << optional_field(t.cop) << ',' << optional_field(t.eta) << ',' << optional_field(t.chi)
      << ',' << bool_field(t.in_cooling_window) << ',' << bool_field(t.work_extracting_feedback)
      << ',' << format_float(c.discord_analytic) << ',' << format_float(c.mutual_info) << ','
      << format_float(c.concurrence) << ',' << format_float(c.eof);
  return row.str();
}

unsigned threads_from_env() {
  const char* raw = std::getenv("QFC_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) {
    throw DomainError("QFC_THREADS must be a non-negative integer");
  }
  return static_cast<unsigned>(v);
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ProtocolParams& p = config.params;
  const ProtocolTrace trace = run_protocol(p);
  const ThermoReport thermo = figures_of_merit(p);
  const CorrelationReport corr = correlation_report(p, true, config.discord);

  int status = kExitOk;
  ordered_json verification;
  if (config.verify) {
    double worst = 0.0;
    ordered_json pairs = ordered_json::object();
    for (const Pair& pr : oracle_pairs(p, trace, thermo)) {
      const double dev = std::abs(pr.closed_form - pr.oracle);
      worst = std::max(worst, dev);
      pairs[pr.name] = {{"closed_form", pr.closed_form}, {"oracle", pr.oracle}, {"deviation", dev}};
    }
    const double discord_dev = std::max(std::abs(*corr.discord_a - corr.discord_analytic),
                                        std::abs(*corr.discord_s - corr.discord_analytic));
    const bool passed = worst <= kRunVerifyTolerance && discord_dev <= kRunDiscordTolerance;
    verification = {{"pairs", pairs},
                    {"max_deviation", worst},
                    {"tolerance", kRunVerifyTolerance},
                    {"discord_deviation", discord_dev},
                    {"discord_tolerance", kRunDiscordTolerance},
                    {"passed", passed}};
    if (!passed) {
      err << "verification failed: max closed-form deviation " << worst << ", discord deviation "
          << discord_dev << "\n";
      status = kExitVerifyFailed;
    }
  }

  const int io = emit(config.output, out, err, [&](std::ostream& os) {
    if (config.format == Format::Csv) {
      os << csv_header() << "\n"
         << csv_row(p.eps_s, p.temperature, CurvePoint{p.eps_a, p.phi, thermo, corr}) << "\n";
      return;
    }
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["params"] = params_json(p);
    doc["trace"] = trace_json(trace);
    doc["thermo"] = thermo_json(thermo);
    doc["correlations"] = correlations_json(corr);
    if (config.verify) doc["verification"] = verification;
    os << doc.dump(2) << "\n";
  });
  return io != kExitOk ? io : status;
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  SweepGrid grid;
  grid.eps_s = config.eps_s;
  grid.temperature = config.temperature;
  if (config.landscape) {
    grid.phi_values = linspace(0.0, kHalfPi, config.n_phi);
  } else {
    grid.phi_values = config.phis.empty()
                          ? std::vector<double>{0.0, std::numbers::pi / 4, 2.0 * std::numbers::pi / 5}
                          : config.phis;
  }
  if (config.n_eps_a < 2) throw DomainError("n-eps-a must be at least 2");
  if (!(config.eps_s < kEpsAUpper)) throw DomainError("eps_s must be below 1 - 1e-9");
  grid.eps_a_values = linspace(config.eps_s, kEpsAUpper, config.n_eps_a);
  grid.validate();

  QuantitySelector sel;
  sel.correlations = true;
  sel.numeric_discord = config.numeric_discord;
  sel.separability = config.landscape && !config.boundary_output.empty();
  const Landscape data = landscape(grid, sel, config.threads);

  int status = emit(config.output, out, err, [&](std::ostream& os) {
    if (config.with_metadata) {
      os << "# schema_version=" << kSchemaVersion << "\n"
         << "# eps_a_upper_clamp=1-1e-9\n"
         << "# units=nats,k_B=1,hbar=1\n"
         << "# discord=" << (config.numeric_discord ? "numeric_and_analytic" : "analytic") << "\n";
    }
    os << csv_header() << "\n";
    for (const CurvePoint& pt : data.points) os << csv_row(grid.eps_s, grid.temperature, pt) << "\n";
  });
  if (status != kExitOk || config.boundary_output.empty()) return status;

  return emit(config.boundary_output, out, err, [&](std::ostream& os) {
    os << "series,eps_a,phi,P,chi\n";
    const auto series = [&](const char* name, const std::vector<BoundaryPoint>& pts) {
      for (const BoundaryPoint& b : pts) {
        os << name << ',' << format_float(b.eps_a) << ',' << format_float(b.phi) << ','
           << format_float(b.cooling_load) << ',' << optional_field(b.chi) << "\n";
      }
    };
    series("cooling_window", data.cooling_window);
    series("work_extraction", data.work_extraction);
    series("separability", data.separability);
  });
}

int cmd_optimize(const OptimizeConfig& config, std::ostream& out, std::ostream& err) {
  const WorkingPoint wp = optimize_working_point(config.objective, config.eps_s, config.phi,
                                                 config.temperature, config.search);
  return emit(config.output, out, err, [&](std::ostream& os) {
    if (config.format == Format::Csv) {
      os << "objective,eps_s,phi,eps_a_star,objective_value,cooling_load_star,boundary,reversible_limit,degenerate\n"
         << to_string(config.objective) << ',' << format_float(config.eps_s) << ','
         << format_float(config.phi) << ',' << format_float(wp.eps_a_star) << ','
         << format_float(wp.objective_value) << ',' << format_float(wp.cooling_load_star) << ','
         << to_string(wp.boundary) << ',' << bool_field(wp.reversible_limit) << ','
         << bool_field(wp.degenerate) << "\n";
      return;
    }
    ordered_json doc{{"schema_version", kSchemaVersion},
                     {"objective", to_string(config.objective)},
                     {"eps_s", config.eps_s},
                     {"phi", config.phi},
                     {"temperature", config.temperature},
                     {"working_point",
                      {{"eps_a_star", wp.eps_a_star},
                       {"objective_value", wp.objective_value},
                       {"cooling_load_star", wp.cooling_load_star},
                       {"boundary", to_string(wp.boundary)},
                       {"reversible_limit", wp.reversible_limit},
                       {"degenerate", wp.degenerate}}}};
    os << doc.dump(2) << "\n";
  });
}

int cmd_threshold(const ThresholdConfig& config, std::ostream& out, std::ostream& err) {
  const double delta_min = discord_threshold(config.eps_s);
  return emit(config.output, out, err, [&](std::ostream& os) {
    if (config.format == Format::Csv) {
      os << "eps_s,delta_min\n" << format_float(config.eps_s) << ',' << format_float(delta_min) << "\n";
      return;
    }
    ordered_json doc{{"schema_version", kSchemaVersion},
                     {"eps_s", config.eps_s},
                     {"phi_boundary", std::asin(config.eps_s)},
                     {"delta_min", delta_min},
                     {"units", "nats"}};
    os << doc.dump(2) << "\n";
  });
}

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
  const VerifyReport report = run_verification(config.options);
  const int io = emit(config.output, out, err, [&](std::ostream& os) {
    if (config.table) {
      os << std::left << std::setw(38) << "invariant" << std::setw(14) << "max_dev"
         << std::setw(10) << "tol" << std::setw(9) << "samples" << "status\n";
      for (const CheckResult& c : report.checks) {
        std::ostringstream dev;
        dev << std::scientific << std::setprecision(2) << c.max_deviation;
        std::ostringstream tol;
        tol << std::scientific << std::setprecision(0) << c.tolerance;
        os << std::left << std::setw(38) << c.name << std::setw(14) << dev.str() << std::setw(10)
           << tol.str() << std::setw(9) << c.samples << (c.passed ? "PASS" : "FAIL") << "\n";
      }
      os << "elapsed " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
    }
    if (config.format == Format::Json) {
      ordered_json checks = ordered_json::array();
      for (const CheckResult& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"max_deviation", c.max_deviation},
                          {"tolerance", c.tolerance},
                          {"samples", c.samples},
                          {"passed", c.passed}});
      }
      ordered_json doc{{"schema_version", kSchemaVersion},
                       {"passed", report.all_passed()},
                       {"checks", checks}};
      os << doc.dump() << "\n";
    } else {
      os << "name,max_deviation,tolerance,samples,passed\n";
      for (const CheckResult& c : report.checks) {
        os << c.name << ',' << format_float(c.max_deviation) << ',' << format_float(c.tolerance)
           << ',' << c.samples << ',' << bool_field(c.passed) << "\n";
      }
    }
  });
  if (io != kExitOk) return io;
  if (const CheckResult* bad = report.first_failure()) {
    err << "verification failed: " << bad->name << " (max deviation " << bad->max_deviation
        << ", tolerance " << bad->tolerance << ")\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-iteration quantum feedback cooling: simulation, thermodynamics, correlations",
               args.empty() ? "qfc" : args.front()};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
  const auto add_format = [&](CLI::App* sub, Format& f) {
    sub->add_option("--format", f, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("json|csv");
  };

  std::string config_path;  // consumed by expand_config; declared for --help
  const auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Flat key = value file with the same names as the flags");
  };

  // run
  RunConfig run;
  bool run_degrees = false;
  CLI::App* run_cmd = app.add_subcommand("run", "Single protocol run with full report");
  add_config(run_cmd);
  run_cmd->add_option("--eps-s", run.params.eps_s, "Register polarization bias")->required();
  run_cmd->add_option("--eps-a", run.params.eps_a, "Ancilla polarization bias")->required();
  run_cmd->add_option("--phi", run.params.phi, "Measurement angle (radians)")->required();
  run_cmd->add_flag("--phi-degrees", run_degrees, "Interpret --phi in degrees");
  run_cmd->add_option("--temperature,-T", run.params.temperature, "Bath temperature (k_B = 1)");
  run_cmd->add_flag("--verify", run.verify, "Pair every closed form with its matrix value");
  run_cmd->add_option("--discord-polar-steps", run.discord.polar_steps, "Discord search grid, polar angle");
  run_cmd->add_option("--discord-azimuth-steps", run.discord.azimuth_steps, "Discord search grid, azimuth");
  run_cmd->add_option("--discord-tol", run.discord.tolerance, "Nelder-Mead objective-spread tolerance");
  run_cmd->add_option("--output,-o", run.output, "Output file (default: stdout)");
  add_format(run_cmd, run.format);

  // sweep
  SweepConfig sweep;
  bool sweep_degrees = false;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Characteristic curves or (phi, eps_a) landscape as CSV");
  add_config(sweep_cmd);
  sweep_cmd->add_option("--eps-s", sweep.eps_s, "Register polarization bias");
  sweep_cmd->add_option("--phi", sweep.phis, "Measurement angles, comma separated")->delimiter(',');
  sweep_cmd->add_flag("--phi-degrees", sweep_degrees, "Interpret --phi in degrees");
  sweep_cmd->add_option("--n-eps-a", sweep.n_eps_a, "Samples of eps_a in [eps_s, 1 - 1e-9]");
  sweep_cmd->add_option("--temperature,-T", sweep.temperature);
  sweep_cmd->add_flag("--landscape", sweep.landscape, "Full phi grid on [0, pi/2]");
  sweep_cmd->add_option("--n-phi", sweep.n_phi, "Landscape phi samples");
  sweep_cmd->add_flag("--numeric-discord", sweep.numeric_discord);
  sweep_cmd->add_flag("--with-metadata", sweep.with_metadata, "Prefix '#' metadata lines");
  sweep_cmd->add_option("--boundary-out", sweep.boundary_output,
                        "Write boundary series (cooling window, phi_crit, separability) here");
  sweep_cmd->add_option("--output,-o", sweep.output);

  // optimize
  OptimizeConfig opt;
  std::string objective = "chi";
  bool opt_degrees = false;
  CLI::App* opt_cmd = app.add_subcommand("optimize", "Optimal ancilla bias for a figure of merit");
  add_config(opt_cmd);
  opt_cmd->add_option("--objective", objective, "cop | eta | chi");
  opt_cmd->add_option("--eps-s", opt.eps_s);
  opt_cmd->add_option("--phi", opt.phi);
  opt_cmd->add_flag("--phi-degrees", opt_degrees);
  opt_cmd->add_option("--temperature,-T", opt.temperature);
  opt_cmd->add_option("--coarse-points", opt.search.coarse_points);
  opt_cmd->add_option("--tol", opt.search.tolerance);
  opt_cmd->add_option("--output,-o", opt.output);
  add_format(opt_cmd, opt.format);

  // threshold
  ThresholdConfig thr;
  CLI::App* thr_cmd = app.add_subcommand("threshold", "Minimum discord delta_min for real cooling");
  add_config(thr_cmd);
  thr_cmd->add_option("--eps-s", thr.eps_s);
  thr_cmd->add_option("--output,-o", thr.output);
  add_format(thr_cmd, thr.format);

  // verify
  VerifyConfig ver;
  std::size_t grid_steps = 12;
  bool no_numeric = false;
  bool quiet = false;
  CLI::App* ver_cmd = app.add_subcommand("verify", "Oracle and invariant suite on a standard grid");
  add_config(ver_cmd);
  ver_cmd->add_option("--grid", grid_steps, "Steps per axis of the (eps_s, eps_a, phi) grid");
  ver_cmd->add_flag("--no-numeric-discord", no_numeric, "Skip the discord optimizer");
  ver_cmd->add_flag("--quiet", quiet, "Omit the human-readable table");
  ver_cmd->add_option("--corrupt", ver.options.corrupt)->group("");  // test fixture
  ver_cmd->add_option("--output,-o", ver.output);
  add_format(ver_cmd, ver.format);

  try {
    std::vector<std::string> tokens = expand_config(args);  // CLI11 wants them reversed
    tokens.erase(tokens.begin());
    std::reverse(tokens.begin(), tokens.end());
    app.parse(tokens);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto to_radians = [](double deg) { return deg * std::numbers::pi / 180.0; };
  try {
    const unsigned threads = threads_from_env();
    if (run_cmd->parsed()) {
      if (run_degrees) run.params.phi = to_radians(run.params.phi);
      run.params.validate();
      return cmd_run(run, out, err);
    }
    if (sweep_cmd->parsed()) {
      if (sweep_degrees) {
        for (double& phi : sweep.phis) phi = to_radians(phi);
      }
      sweep.threads = threads;
      return cmd_sweep(sweep, out, err);
    }
    if (opt_cmd->parsed()) {
      if (opt_degrees) opt.phi = to_radians(opt.phi);
      opt.objective = parse_objective(objective);
      return cmd_optimize(opt, out, err);
    }
    if (thr_cmd->parsed()) return cmd_threshold(thr, out, err);
    if (ver_cmd->parsed()) {
      ver.options.eps_s_steps = ver.options.eps_a_steps = ver.options.phi_steps = grid_steps;
      ver.options.numeric_discord = !no_numeric;
      ver.options.threads = threads;
      ver.table = !quiet;
      return cmd_verify(ver, out, err);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qfc::cli
