#include "otto/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "otto/cubic.hpp"
#include "otto/cycle.hpp"
#include "otto/high_temperature.hpp"
#include "otto/optima.hpp"
#include "otto/oracle.hpp"
#include "otto/phase_diagram.hpp"

namespace otto::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxResolution = 10000;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoWindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Validation

void require_open_unit(const char* flag, double x) {
  if (!(std::isfinite(x) && x > 0.0 && x < 1.0)) {
    throw InputError(std::string(flag) + " must lie in (0,1), got " + format_number(x));
  }
}

void require_half_open_unit(const char* flag, double x) {
  if (!(std::isfinite(x) && x > 0.0 && x <= 1.0)) {
    throw InputError(std::string(flag) + " must lie in (0,1], got " + format_number(x));
  }
}

void require_positive(const char* flag, double x) {
  if (!(std::isfinite(x) && x > 0.0)) {
    throw InputError(std::string(flag) + " must be positive, got " + format_number(x));
  }
}

void require_resolution(const char* flag, long n, long min_n = 1) {
  if (n < min_n || n > static_cast<long>(kMaxResolution)) {
    throw InputError(std::string(flag) + " must lie in [" + std::to_string(min_n) + ", " +
                     std::to_string(kMaxResolution) + "], got " + std::to_string(n));
  }
}

Scenario parse_scenario(const std::string& name) {
  return name == "sc" ? kSuddenCompression : kSuddenExpansion;
}

std::string scenario_name(Scenario s) { return s == kSuddenCompression ? "sc" : "se"; }

// ---------------------------------------------------------------------------
// Output

class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& columns) {
    text_ << kSchemaLine << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
      text_ << (i ? "," : "") << columns[i];
    }
    text_ << '\n';
  }

  CsvWriter& cell(double x) { return raw(format_number(x)); }
  CsvWriter& cell(const std::optional<double>& x) { return raw(x ? format_number(*x) : ""); }
  CsvWriter& cell(std::string_view s) { return raw(std::string(s)); }

  void end_row() {
    text_ << '\n';
    first_ = true;
  }

  std::string str() const { return text_.str(); }

 private:
  CsvWriter& raw(const std::string& s) {
    text_ << (first_ ? "" : ",") << s;
    first_ = false;
    return *this;
  }

  std::ostringstream text_;
  bool first_ = true;
};

Json json_number(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) {
    return nullptr;
  }
  return *x;
}

// ---------------------------------------------------------------------------
// Point evaluation shared by evaluate and sweep

struct PointInput {
  double z = 0.0;
  double tau = 0.0;
  double v = 0.0;
  double beta_h = 1.0;
  double omega_h = 1.0;
  Scenario scenario = kSuddenCompression;
  bool exact = false;
};

struct PointResult {
  PointInput in;
  PerformanceRecord record;
};

void validate(const PointInput& in) {
  require_half_open_unit("--z", in.z);
  require_open_unit("--tau", in.tau);
  require_open_unit("--v", in.v);
  require_positive("--beta-h", in.beta_h);
  require_positive("--omega-h", in.omega_h);
}

PointResult evaluate_point(const PointInput& in) {
  validate(in);
  PointResult result{in, {}};
  if (in.exact) {
    result.record = heats_and_work(
        CycleParams::from_reduced(in.z, in.tau, in.v, in.beta_h, in.omega_h), in.scenario);
  } else {
    result.record = high_temperature_record(ReducedParams(in.z, in.tau, in.v, in.beta_h),
                                            in.scenario);
  }
  const auto eta_max = in.scenario == kSuddenCompression ? eta_max_sc(1.0 - in.tau, in.v)
                                                         : eta_max_se(1.0 - in.tau, in.v);
  if (eta_max && *eta_max > 0.0) {
    result.record.omega_value = omega_function(result.record, *eta_max);
  }
  // The boundary band is defined in units of 1/beta_h.
  result.record.mode = classify_signs(result.record.w_ext, result.record.q_h, result.record.q_c,
                                      kBoundaryEps / in.beta_h);
  return result;
}

const std::vector<std::string> kRecordColumns = {"z", "tau", "v", "beta_h", "scenario", "q_h",
                                                 "q_c", "w_ext", "eta", "omega", "mode"};

Json record_json(const PointResult& p) {
  Json j;
  j["z"] = p.in.z;
  j["tau"] = p.in.tau;
  j["v"] = p.in.v;
  j["beta_h"] = p.in.beta_h;
  j["scenario"] = scenario_name(p.in.scenario);
  j["q_h"] = p.record.q_h;
  j["q_c"] = p.record.q_c;
  j["w_ext"] = p.record.w_ext;
  j["eta"] = json_number(p.record.eta);
  j["omega"] = json_number(p.record.omega_value);
  j["mode"] = std::string(to_string(*p.record.mode));
  return j;
}

void record_csv(CsvWriter& csv, const PointResult& p) {
  csv.cell(p.in.z)
      .cell(p.in.tau)
      .cell(p.in.v)
      .cell(p.in.beta_h)
      .cell(scenario_name(p.in.scenario))
      .cell(p.record.q_h)
      .cell(p.record.q_c)
      .cell(p.record.w_ext)
      .cell(p.record.eta)
      .cell(p.record.omega_value)
      .cell(to_string(*p.record.mode));
  csv.end_row();
}

// ---------------------------------------------------------------------------
// Commands. Each returns the text to emit.

struct EvaluateArgs {
  PointInput point;
  std::string format = "json";
};

std::string cmd_evaluate(const EvaluateArgs& args) {
  const PointResult p = evaluate_point(args.point);
  if (args.format == "json") {
    return record_json(p).dump() + "\n";
  }
  CsvWriter csv(kRecordColumns);
  record_csv(csv, p);
  return csv.str();
}

struct OptimizeArgs {
  std::string objective;
  std::string scenario;
  double tau = 0.0;
  double v = 0.0;
  std::string format = "json";
};

std::string source_name(OptimumSource s) {
  return s == OptimumSource::ClosedForm ? "closed-form" : "oracle-fallback";
}

std::string cmd_optimize(const OptimizeArgs& args) {
  require_open_unit("--tau", args.tau);
  require_open_unit("--v", args.v);
  const Objective objective = args.objective == "eta"    ? Objective::MaxEfficiency
                              : args.objective == "work" ? Objective::MaxWork
                                                         : Objective::MaxOmega;
  const Scenario scenario = parse_scenario(args.scenario);
  const auto report = optimize(OptimizationTarget(objective, scenario), args.tau, args.v);
  if (!report) {
    throw NoWindowError("no engine window at tau = " + format_number(args.tau) +
                        ", v = " + format_number(args.v));
  }
  if (args.format == "json") {
    Json j;
    j["objective"] = args.objective;
    j["scenario"] = args.scenario;
    j["tau"] = args.tau;
    j["v"] = args.v;
    j["z_star"] = report->z_star;
    j["value"] = report->value_at_opt;
    j["eta_at_opt"] = report->eta_at_opt;
    j["source"] = source_name(report->source);
    j["oracle_z_star"] = report->oracle_z_star;
    return j.dump() + "\n";
  }
  CsvWriter csv({"objective", "scenario", "tau", "v", "z_star", "value", "eta_at_opt", "source",
                 "oracle_z_star"});
  csv.cell(args.objective)
      .cell(args.scenario)
      .cell(args.tau)
      .cell(args.v)
      .cell(report->z_star)
      .cell(report->value_at_opt)
      .cell(report->eta_at_opt)
      .cell(source_name(report->source))
      .cell(report->oracle_z_star);
  csv.end_row();
  return csv.str();
}

struct SweepArgs {
  PointInput point;
  std::string axis = "z";
  double lo = 0.0;
  double hi = 0.0;
  long n = 101;
  std::string format = "csv";
};

std::string cmd_sweep(const SweepArgs& args) {
  require_resolution("--n", args.n);
  if (!(std::isfinite(args.lo) && std::isfinite(args.hi) && args.lo <= args.hi)) {
    throw InputError("--lo must not exceed --hi");
  }
  const std::size_t count = args.lo == args.hi ? 1 : static_cast<std::size_t>(args.n);
  std::vector<PointResult> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = count == 1 ? args.lo
                     : i + 1 == count
                         ? args.hi
                         : args.lo + (args.hi - args.lo) * static_cast<double>(i) /
                                         static_cast<double>(count - 1);
    PointInput in = args.point;
    (args.axis == "z" ? in.z : args.axis == "tau" ? in.tau : in.v) = x;
    rows.push_back(evaluate_point(in));
  }
  if (args.format == "json") {
    Json array = Json::array();
    for (const auto& row : rows) {
      array.push_back(record_json(row));
    }
    return array.dump() + "\n";
  }
  CsvWriter csv(kRecordColumns);
  for (const auto& row : rows) {
    record_csv(csv, row);
  }
  return csv.str();
}

Json phase_summary(const PhaseMap& map, std::size_t resolution) {
  const auto fractions = map.mode_fractions();
  Json modes;
  for (const OperationalMode mode :
       {OperationalMode::Engine, OperationalMode::Refrigerator, OperationalMode::Heater,
        OperationalMode::ThermalAccelerator, OperationalMode::Boundary}) {
    modes[std::string(to_string(mode))] = fractions[static_cast<std::size_t>(mode)];
  }
  Json j;
  j["scenario"] = scenario_name(map.scenario());
  j["v"] = map.v();
  j["resolution"] = resolution;
  j["mode_fractions"] = modes;
  return j;
}

const std::vector<std::string> kPhaseColumns = {"z", "tau", "v", "scenario", "mode"};

void phase_csv(CsvWriter& csv, const PhaseMap& map) {
  const std::string scenario = scenario_name(map.scenario());
  for (std::size_t iz = 0; iz < map.z_axis().size(); ++iz) {
    for (std::size_t it = 0; it < map.tau_axis().size(); ++it) {
      csv.cell(map.z_axis()[iz])
          .cell(map.tau_axis()[it])
          .cell(map.v())
          .cell(scenario)
          .cell(to_string(map.at(iz, it)));
      csv.end_row();
    }
  }
}

struct PhaseMapArgs {
  std::string scenario;
  double v = 0.0;
  long resolution = 200;
  std::string format = "csv";
  std::string summary_path;
};

struct PhaseMapOutput {
  std::string main;
  std::string summary;
};

PhaseMapOutput cmd_phase_map(const PhaseMapArgs& args) {
  require_open_unit("--v", args.v);
  require_resolution("--resolution", args.resolution, 2);
  const auto n = static_cast<std::size_t>(args.resolution);
  const PhaseMap map = rasterize(parse_scenario(args.scenario), args.v, n, n);
  PhaseMapOutput output;
  output.summary = phase_summary(map, n).dump() + "\n";
  if (args.format == "json") {
    output.main = output.summary;
    output.summary.clear();
    return output;
  }
  CsvWriter csv(kPhaseColumns);
  phase_csv(csv, map);
  output.main = csv.str();
  return output;
}

struct FigureArgs {
  int id = 0;
  std::vector<double> velocities = {0.35, 0.75, 0.95};
  std::optional<double> tau;
  std::optional<long> points;
};

std::string figure_efficiency_at_omega(const std::vector<double>& velocities, std::size_t n) {
  CsvWriter csv({"eta_c", "v", "scenario", "eta_omega"});
  const auto axis = cell_centres(n);
  for (const double v : velocities) {
    for (const Scenario s : {kSuddenCompression, kSuddenExpansion}) {
      for (const double eta_c : axis) {
        const double eta = s == kSuddenCompression ? eta_omega_sc(eta_c, v) : eta_omega_se(eta_c, v);
        csv.cell(eta_c).cell(v).cell(scenario_name(s)).cell(eta);
        csv.end_row();
      }
    }
  }
  return csv.str();
}

std::string figure_work_curves(const std::vector<double>& velocities, double tau, std::size_t n) {
  CsvWriter csv({"z", "v", "scenario", "work"});
  const auto axis = cell_centres(n);
  for (const double v : velocities) {
    for (const Scenario s : {kSuddenCompression, kSuddenExpansion}) {
      for (const double z : axis) {
        const ReducedParams r(z, tau, v);
        csv.cell(z).cell(v).cell(scenario_name(s)).cell(
            s == kSuddenCompression ? work_sc(r) : work_se(r));
        csv.end_row();
      }
    }
  }
  return csv.str();
}

std::string figure_work_efficiency_loops(const std::vector<double>& velocities, double tau,
                                         std::size_t n) {
  CsvWriter csv({"z", "v", "scenario", "eta", "work"});
  for (const double v : velocities) {
    const double a = tau * relativistic_factor(v);
    for (const Scenario s : {kSuddenCompression, kSuddenExpansion}) {
      // The loop runs over the engine window, from W = 0 at the lower bound to W = 0 at z = 1.
      const double lo = engine_lower_bound(s, a);
      for (std::size_t i = 0; i < n; ++i) {
        const double z = i + 1 == n ? 1.0
                                    : lo + (1.0 - lo) * static_cast<double>(i) /
                                               static_cast<double>(n - 1);
        const PerformanceRecord rec = high_temperature_record(ReducedParams(z, tau, v), s);
        csv.cell(z).cell(v).cell(scenario_name(s)).cell(rec.eta).cell(rec.w_ext);
        csv.end_row();
      }
    }
  }
  return csv.str();
}

std::string figure_phase(const std::vector<double>& velocities, Scenario s, std::size_t n) {
  CsvWriter csv(kPhaseColumns);
  for (const double v : velocities) {
    phase_csv(csv, rasterize(s, v, n, n));
  }
  return csv.str();
}

std::string cmd_figure(const FigureArgs& args) {
  if (args.id < 2 || args.id > 6) {
    throw InputError("--id must be one of 2, 3, 4, 5, 6, got " + std::to_string(args.id));
  }
  if (args.velocities.empty()) {
    throw InputError("--v needs at least one velocity");
  }
  for (const double v : args.velocities) {
    require_open_unit("--v", v);
  }
  const long default_points = args.id == 2 ? 100 : 200;
  const long points = args.points.value_or(default_points);
  require_resolution("--points", points, 2);
  const auto n = static_cast<std::size_t>(points);
  const double tau = args.tau.value_or(args.id == 4 ? 0.4 : 0.5);
  require_open_unit("--tau", tau);

  switch (args.id) {
    case 2: return figure_efficiency_at_omega(args.velocities, n);
    case 3: return figure_work_curves(args.velocities, tau, n);
    case 4: return figure_work_efficiency_loops(args.velocities, tau, n);
    case 5: return figure_phase(args.velocities, kSuddenCompression, n);
    default: return figure_phase(args.velocities, kSuddenExpansion, n);
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw InputError("cannot open output file " + path);
  }
  file << text;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buffer[64];
  const auto [end, ec] = std::to_chars(std::begin(buffer), std::end(buffer), x);
  return std::string(buffer, end);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic quantum Otto cycle: energetics, optima and phase maps", "otto-rel"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write output to this file instead of stdout");

  const std::vector<std::string> scenarios = {"sc", "se"};
  const std::vector<std::string> formats = {"csv", "json"};

  EvaluateArgs eval;
  std::string eval_scenario;
  auto* evaluate = app.add_subcommand("evaluate", "Heats, work, efficiency and mode at one point");
  evaluate->add_option("--scenario", eval_scenario)->required()->check(CLI::IsMember(scenarios));
  evaluate->add_option("--z", eval.point.z, "omega_c / omega_h")->required();
  evaluate->add_option("--tau", eval.point.tau, "beta_h / beta_c")->required();
  evaluate->add_option("--v", eval.point.v, "oscillator velocity")->required();
  evaluate->add_option("--beta-h", eval.point.beta_h, "hot inverse temperature")
      ->capture_default_str();
  evaluate->add_option("--omega-h", eval.point.omega_h, "hot frequency (exact path only)")
      ->capture_default_str();
  evaluate->add_flag("--exact", eval.point.exact, "Use the exact cycle instead of the HT limit");
  evaluate->add_option("--format", eval.format)->check(CLI::IsMember(formats))->capture_default_str();

  OptimizeArgs opt;
  auto* optimize_cmd = app.add_subcommand("optimize", "Optimal frequency ratio for an objective");
  optimize_cmd->add_option("--objective", opt.objective)
      ->required()
      ->check(CLI::IsMember({"eta", "work", "omega"}));
  optimize_cmd->add_option("--scenario", opt.scenario)->required()->check(CLI::IsMember(scenarios));
  optimize_cmd->add_option("--tau", opt.tau)->required();
  optimize_cmd->add_option("--v", opt.v)->required();
  optimize_cmd->add_option("--format", opt.format)->check(CLI::IsMember(formats))->capture_default_str();

  SweepArgs sweep;
  std::string sweep_scenario;
  sweep.point.z = 0.5;
  sweep.point.tau = 0.5;
  sweep.point.v = 0.5;
  auto* sweep_cmd = app.add_subcommand("sweep", "Records along one axis");
  sweep_cmd->add_option("--scenario", sweep_scenario)->required()->check(CLI::IsMember(scenarios));
  sweep_cmd->add_option("--axis", sweep.axis)->check(CLI::IsMember({"z", "tau", "v"}))->capture_default_str();
  sweep_cmd->add_option("--lo", sweep.lo)->required();
  sweep_cmd->add_option("--hi", sweep.hi)->required();
  sweep_cmd->add_option("--n", sweep.n, "number of points")->capture_default_str();
  sweep_cmd->add_option("--z", sweep.point.z)->capture_default_str();
  sweep_cmd->add_option("--tau", sweep.point.tau)->capture_default_str();
  sweep_cmd->add_option("--v", sweep.point.v)->capture_default_str();
  sweep_cmd->add_option("--beta-h", sweep.point.beta_h)->capture_default_str();
  sweep_cmd->add_option("--omega-h", sweep.point.omega_h)->capture_default_str();
  sweep_cmd->add_flag("--exact", sweep.point.exact);
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember(formats))->capture_default_str();

  PhaseMapArgs phase;
  auto* phase_cmd = app.add_subcommand("phase-map", "Operating-mode raster over (z, tau)");
  phase_cmd->add_option("--scenario", phase.scenario)->required()->check(CLI::IsMember(scenarios));
  phase_cmd->add_option("--v", phase.v)->required();
  phase_cmd->add_option("--resolution", phase.resolution, "points per axis")->capture_default_str();
  phase_cmd->add_option("--summary", phase.summary_path, "Write the JSON summary to this file");
  phase_cmd->add_option("--format", phase.format)->check(CLI::IsMember(formats))->capture_default_str();

  FigureArgs figure;
  long figure_points = 0;
  double figure_tau = 0.0;
  auto* figure_cmd = app.add_subcommand("figure", "Long-format CSV data for figures 2-6");
  figure_cmd->add_option("--id", figure.id)->required();
  figure_cmd->add_option("--v", figure.velocities, "comma-separated velocities")
      ->delimiter(',')
      ->capture_default_str();
  auto* tau_opt = figure_cmd->add_option("--tau", figure_tau);
  auto* points_opt = figure_cmd->add_option("--points", figure_points, "samples per axis");

  // CLI11 consumes the argument vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (evaluate->parsed()) {
      eval.point.scenario = parse_scenario(eval_scenario);
      emit(cmd_evaluate(eval), output_path, out);
    } else if (optimize_cmd->parsed()) {
      emit(cmd_optimize(opt), output_path, out);
    } else if (sweep_cmd->parsed()) {
      sweep.point.scenario = parse_scenario(sweep_scenario);
      emit(cmd_sweep(sweep), output_path, out);
    } else if (phase_cmd->parsed()) {
      const PhaseMapOutput result = cmd_phase_map(phase);
      emit(result.main, output_path, out);
      if (!result.summary.empty()) {
        if (phase.summary_path.empty()) {
          err << result.summary;
        } else {
          emit(result.summary, phase.summary_path, out);
        }
      }
    } else if (figure_cmd->parsed()) {
      if (tau_opt->count() > 0) {
        figure.tau = figure_tau;
      }
      if (points_opt->count() > 0) {
        figure.points = figure_points;
      }
      emit(cmd_figure(figure), output_path, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NoWindowError& e) {
    err << "error: " << e.what() << '\n';
    return kNoWindow;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kNoWindow;
  } catch (const oracle::OracleError& e) {
    err << "error: " << e.what() << '\n';
    return kNoWindow;
  }
  return kOk;
}

}  // namespace otto::cli
