#include "twophoton/run.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

namespace twophoton::cli {

namespace {

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_visibility(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

struct UnitTable {
  const char* kind;
  std::vector<std::pair<std::string, double>> suffixes;
  double bare;
};

double parse_with_units(const std::string& text, const UnitTable& units) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError(std::string("empty ") + units.kind + " value");
  errno = 0;
  char* end = nullptr;
  double value = std::strtod(s.c_str(), &end);
  std::string suffix;
  if (end == s.c_str()) {
    // no digits: accept a bare unit ("pi" = 1 pi), with an optional sign
    value = 1.0;
    suffix = s;
    if (!suffix.empty() && (suffix[0] == '-' || suffix[0] == '+')) {
      if (suffix[0] == '-') value = -1.0;
      suffix = trim(suffix.substr(1));
    }
    if (suffix.empty())
      throw ParseError(std::string("cannot parse ") + units.kind + " value '" + s + "'");
  } else {
    if (errno == ERANGE)
      throw ParseError(std::string("cannot parse ") + units.kind + " value '" + s + "'");
    suffix = trim(std::string(end));
  }
  if (suffix.empty()) return value * units.bare;
  for (const auto& [name, factor] : units.suffixes)
    if (suffix == name) return value * factor;
  throw ParseError(std::string("unknown ") + units.kind + " unit '" + suffix + "' in '" + s + "'");
}

const std::vector<std::string>& canonical_models(ExperimentKind kind) {
  static const std::vector<std::string> gm{"classical", "converted", "quantum"};
  static const std::vector<std::string> eraser{"classical", "converted", "quantum", "montecarlo"};
  static const std::vector<std::string> franson{"narrow", "wide", "classical"};
  switch (kind) {
    case ExperimentKind::GhoshMandel: return gm;
    case ExperimentKind::Eraser: return eraser;
    case ExperimentKind::Franson: return franson;
  }
  return gm;
}

std::vector<std::string> resolve_models(ExperimentKind kind,
                                        const std::vector<std::string>& requested) {
  const auto& known = canonical_models(kind);
  if (requested.empty()) {
    // default: every analytic model; Monte Carlo only on request
    std::vector<std::string> out;
    for (const auto& name : known)
      if (name != "montecarlo") out.push_back(name);
    return out;
  }
  for (const auto& name : requested)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ConfigError("unknown model '" + name + "' for this experiment");
  std::vector<std::string> out;
  for (const auto& name : known)
    if (std::find(requested.begin(), requested.end(), name) != requested.end())
      out.push_back(name);
  return out;
}

bool has_model(const std::vector<std::string>& models, std::string_view name) {
  return std::find(models.begin(), models.end(), name) != models.end();
}

// flat key=value config support: keys become flags appended after the
// explicit ones, skipping any flag already present so the command line wins
std::vector<std::string> expand_config_args(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file '" + path + "'");

  const auto given = [&args](const std::string& flag) {
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };

  std::vector<std::string> out = args;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string entry = trim(line);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("config line " + std::to_string(line_number) +
                        " is not of the form key=value");
    const std::string flag = "--" + trim(entry.substr(0, eq));
    if (!given(flag)) {
      out.push_back(flag);
      out.push_back(trim(entry.substr(eq + 1)));
    }
  }
  return out;
}

std::string sweep_line(const SweepRequest& sweep) {
  return "sweep = " + sweep.parameter + ":" + fmt12(sweep.start) + ":" + fmt12(sweep.stop) + ":" +
         std::to_string(sweep.points);
}

void append_visibilities(std::string& summary, const FringeScan& scan) {
  for (const auto& [name, v] : scan.visibilities)
    summary += "V_" + name + " = " + fmt_visibility(v) + "\n";
}

std::string case_name(experiments::EraserCase c) {
  switch (c) {
    case experiments::EraserCase::NoPolarizers: return "a";
    case experiments::EraserCase::OnePolarizer: return "b";
    case experiments::EraserCase::TwoPolarizers: return "c";
  }
  return "?";
}

RunResult run_ghosh_mandel(const RunConfig& config, const std::vector<std::string>& models) {
  const auto& cfg = config.ghosh_mandel;
  std::string summary = "experiment = ghosh-mandel\n";
  RunResult result;
  if (config.sweep) {
    if (config.sweep->parameter != "dx")
      throw ConfigError("ghosh-mandel sweeps the detector separation 'dx'");
    experiments::ModelSet set{has_model(models, "classical"), has_model(models, "converted"),
                              has_model(models, "quantum"), false};
    const FringeScan scan = experiments::scan_ghosh_mandel(cfg, config.sweep->start,
                                                           config.sweep->stop,
                                                           config.sweep->points, set);
    result.csv = format_csv(scan);
    summary += sweep_line(*config.sweep) + "\n";
    append_visibilities(summary, scan);
  } else {
    for (const auto& name : models) {
      double value = 0.0;
      if (name == "classical")
        value = experiments::ghosh_mandel_classical_from_fields(cfg, config.point_dx, 0.0);
      else if (name == "converted")
        value = experiments::ghosh_mandel_converted(cfg, config.point_dx, 0.0);
      else
        value = experiments::ghosh_mandel_quantum(cfg, config.point_dx, 0.0);
      summary += "C_" + name + " = " + fmt12(value) + "\n";
    }
  }
  result.summary = std::move(summary);
  return result;
}

RunResult run_eraser(const RunConfig& config, const std::vector<std::string>& models) {
  const auto& cfg = config.eraser;
  cfg.validate();
  const bool monte_carlo = has_model(models, "montecarlo");
  if (monte_carlo && !config.seed)
    throw ConfigError("the montecarlo model needs --seed");

  std::string summary = "experiment = eraser\ncase = " + case_name(cfg.experiment_case()) + "\n";
  RunResult result;
  if (config.sweep) {
    experiments::EraserParameter parameter;
    if (config.sweep->parameter == "phi")
      parameter = experiments::EraserParameter::Phi;
    else if (config.sweep->parameter == "theta1")
      parameter = experiments::EraserParameter::Theta1;
    else if (config.sweep->parameter == "theta2")
      parameter = experiments::EraserParameter::Theta2;
    else
      throw ConfigError("eraser sweeps 'phi', 'theta1' or 'theta2'");

    experiments::ModelSet set{has_model(models, "classical"), has_model(models, "converted"),
                              has_model(models, "quantum"), monte_carlo};
    std::optional<experiments::MonteCarloOptions> mc;
    if (monte_carlo) mc = experiments::MonteCarloOptions{config.mc_samples, *config.seed};
    const FringeScan scan = experiments::scan_eraser(cfg, parameter, config.sweep->start,
                                                     config.sweep->stop, config.sweep->points,
                                                     set, mc);
    result.csv = format_csv(scan);
    summary += sweep_line(*config.sweep) + "\n";
    append_visibilities(summary, scan);
    if (monte_carlo && scan.curve("classical")) {
      const auto& mc_curve = *scan.curve("montecarlo");
      const auto& cl_curve = *scan.curve("classical");
      double worst = 0.0;
      for (std::size_t i = 0; i < mc_curve.size(); ++i)
        worst = std::max(worst, std::abs(mc_curve[i] - cl_curve[i]));
      summary += "mc_max_abs_deviation = " + fmt12(worst) + "\n";
    }
  } else {
    for (const auto& name : models) {
      if (name == "montecarlo") {
        const auto mc = experiments::eraser_monte_carlo(cfg, config.mc_samples, *config.seed);
        summary += "C_montecarlo = " + fmt12(mc.value) + "\n";
        summary += "mc_std_error = " + fmt12(mc.std_error) + "\n";
        continue;
      }
      experiments::Model model = experiments::Model::Classical;
      if (name == "converted") model = experiments::Model::Converted;
      if (name == "quantum") model = experiments::Model::QuantumReference;
      summary += "C_" + name + " = " + fmt12(experiments::eraser_coincidence(cfg, model)) + "\n";
    }
  }
  result.summary = std::move(summary);
  return result;
}

RunResult run_franson(const RunConfig& config, const std::vector<std::string>& models) {
  const franson::FransonConfig cfg = config.franson.build();
  std::string summary = "experiment = franson\n";
  summary += std::string("mode = ") +
             (cfg.window() == franson::Window::Narrow ? "narrow" : "wide") + "\n";
  RunResult result;
  if (config.sweep) {
    if (config.sweep->parameter != "phase")
      throw ConfigError("franson sweeps the carrier phase 'phase'");
    franson::FringeModels set{has_model(models, "narrow"), has_model(models, "wide"),
                              has_model(models, "classical")};
    const FringeScan scan = franson::fringe_scan_range(cfg, set, config.sweep->start,
                                                       config.sweep->stop, config.sweep->points);
    result.csv = format_csv(scan);
    summary += sweep_line(*config.sweep) + "\n";
    append_visibilities(summary, scan);
  } else {
    const auto amps = franson::amplitudes(cfg);
    for (const auto& name : models) {
      double value = 0.0;
      if (name == "narrow")
        value = franson::coincidence_narrow(cfg);
      else if (name == "wide")
        value = franson::coincidence_wide(cfg);
      else
        value = franson::coincidence_classical(cfg);
      summary += "C_" + name + " = " + fmt12(value) + "\n";
    }
    summary += "abs_ss = " + fmt12(std::abs(amps.ss)) + "\n";
    summary += "abs_ll = " + fmt12(std::abs(amps.ll)) + "\n";
    summary += "abs_sl = " + fmt12(std::abs(amps.sl)) + "\n";
    summary += "abs_ls = " + fmt12(std::abs(amps.ls)) + "\n";
  }
  summary += "regime sigma*delta_L = " + fmt12(cfg.regime_parameter()) +
             (cfg.suppression_regime() ? " (suppression ok)" : " (below threshold)") + "\n";
  if (config.franson.coincidence_path) {
    const franson::Window window =
        franson::classify_window(cfg.path_difference(), *config.franson.coincidence_path);
    summary += std::string("window = ") +
               (window == franson::Window::Narrow ? "narrow" : "wide") +
               " (c*tau = " + fmt12(*config.franson.coincidence_path) +
               " um, delta_L = " + fmt12(cfg.path_difference()) + " um)\n";
  }
  result.summary = std::move(summary);
  return result;
}

}  // namespace

double parse_number(const std::string& text) {
  return parse_with_units(text, UnitTable{"numeric", {}, 1.0});
}

double parse_length_um(const std::string& text) {
  static const UnitTable table{
      "length",
      {{"nm", 1e-3}, {"um", 1.0}, {"µm", 1.0}, {"mm", 1e3}, {"cm", 1e4}, {"m", 1e6}},
      1.0};
  return parse_with_units(text, table);
}

double parse_length_um(const std::string& text, double l0) {
  UnitTable table{
      "length",
      {{"nm", 1e-3}, {"um", 1.0}, {"µm", 1.0}, {"mm", 1e3}, {"cm", 1e4}, {"m", 1e6},
       {"L0", l0}, {"l0", l0}},
      1.0};
  return parse_with_units(text, table);
}

double parse_angle_rad(const std::string& text) {
  static const UnitTable table{
      "angle",
      {{"rad", 1.0}, {"deg", std::numbers::pi / 180.0}, {"pi", std::numbers::pi},
       {"π", std::numbers::pi}},
      1.0};
  return parse_with_units(text, table);
}

double parse_time_ns(const std::string& text) {
  static const UnitTable table{
      "time", {{"ps", 1e-3}, {"ns", 1.0}, {"us", 1e3}, {"ms", 1e6}, {"s", 1e9}}, 1.0};
  return parse_with_units(text, table);
}

RawSweep parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type from = 0;
  while (true) {
    const auto colon = text.find(':', from);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(from));
      break;
    }
    parts.push_back(text.substr(from, colon - from));
    from = colon + 1;
  }
  if (parts.size() != 4)
    throw ParseError("sweep must be name:start:stop:points, got '" + text + "'");
  RawSweep sweep;
  sweep.parameter = trim(parts[0]);
  sweep.start = parts[1];
  sweep.stop = parts[2];
  errno = 0;
  char* end = nullptr;
  const long points = std::strtol(trim(parts[3]).c_str(), &end, 10);
  if (end == nullptr || *end != '\0' || errno == ERANGE || points < 2)
    throw ParseError("sweep point count must be an integer >= 2, got '" + parts[3] + "'");
  sweep.points = static_cast<int>(points);
  return sweep;
}

franson::FransonConfig FransonSettings::build() const {
  const spectral::SpectralAmplitude signal(pump_wavenumber / 2.0, sigma_k);
  return franson::FransonConfig(path_difference, pump_wavenumber, signal, x_s, x_i, window);
}

std::string format_csv(const FringeScan& scan) {
  std::string out = "param";
  for (const auto& [name, curve] : scan.curves) out += "," + name;
  out += "\n";
  for (std::size_t i = 0; i < scan.values.size(); ++i) {
    out += fmt12(scan.values[i]);
    for (const auto& [name, curve] : scan.curves) out += "," + fmt12(curve[i]);
    out += "\n";
  }
  return out;
}

RunResult run(const RunConfig& config) {
  const std::vector<std::string> models = resolve_models(config.experiment, config.models);
  RunResult result;
  switch (config.experiment) {
    case ExperimentKind::GhoshMandel: result = run_ghosh_mandel(config, models); break;
    case ExperimentKind::Eraser: result = run_eraser(config, models); break;
    case ExperimentKind::Franson: result = run_franson(config, models); break;
  }
  if (!result.csv.empty() && !config.out_path.empty()) {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + config.out_path + "'");
    file << result.csv;
    if (!file) throw ConfigError("failed writing output file '" + config.out_path + "'");
  }
  return result;
}

ConvertReport convert_report_from_text(const std::string& text,
                                       const std::string& modulated_label) {
  convert::IntensityPoly poly;
  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string sources, coefficient, label;
    if (!(fields >> sources)) continue;  // blank line
    if (!(fields >> coefficient))
      throw ParseError("poly line " + std::to_string(line_number) +
                       ": expected '<sources> <coefficient> [label]'");
    if (!(fields >> label)) label = "const";
    std::string extra;
    if (fields >> extra)
      throw ParseError("poly line " + std::to_string(line_number) + ": trailing token '" +
                       extra + "'");
    try {
      poly.add(convert::SourceMultiset::parse(sources), parse_number(coefficient), label);
    } catch (const ParseError& e) {
      throw ParseError("poly line " + std::to_string(line_number) + ": " + e.what());
    }
  }

  ConvertReport report;
  report.before = poly;
  report.after = convert::apply_conversion_rule(poly);

  const auto try_visibility = [&modulated_label](const convert::IntensityPoly& p)
      -> std::optional<double> {
    std::vector<std::string> constants;
    for (const auto& term : p.terms())
      if (term.label != modulated_label &&
          std::find(constants.begin(), constants.end(), term.label) == constants.end())
        constants.push_back(term.label);
    try {
      return convert::visibility_of(p, modulated_label, constants);
    } catch (const NotFringeForm&) {
      return std::nullopt;
    }
  };
  report.visibility_before = try_visibility(report.before);
  report.visibility_after = try_visibility(report.after);

  const auto dump = [](const convert::IntensityPoly& p) {
    std::string out;
    for (const auto& term : p.terms())
      out += "  " + term.sources.str() + " " + fmt12(term.coefficient) + " " + term.label + "\n";
    if (p.terms().empty()) out += "  (empty)\n";
    return out;
  };
  const auto v_line = [](const char* name, const std::optional<double>& v) {
    return std::string(name) + " = " + (v ? fmt_visibility(*v) : "n/a (not fringe form)") + "\n";
  };
  report.text = "before:\n" + dump(report.before) + v_line("V_before", report.visibility_before) +
                "after:\n" + dump(report.after) + v_line("V_after", report.visibility_after);
  return report;
}

ConvertReport convert_report_from_file(const std::string& path,
                                       const std::string& modulated_label) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open poly file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return convert_report_from_text(buffer.str(), modulated_label);
}

int run_main(int argc, const char* const* argv) {
  CLI::App app{"two-photon coincidence and visibility simulator"};
  app.require_subcommand(1);

  struct CommonFlags {
    std::string sweep, models, out, config;
    std::optional<std::uint64_t> seed;
  };
  const auto add_common = [](CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--sweep", flags.sweep, "parameter sweep, name:start:stop:points");
    cmd->add_option("--models", flags.models, "comma-separated model list");
    cmd->add_option("--seed", flags.seed, "random seed (required for montecarlo)");
    cmd->add_option("--out", flags.out, "write the sweep CSV to this file");
    cmd->add_option("--config", flags.config,
                    "flat key=value file mirroring the flags; flags override");
  };
  const auto split_models = [](const std::string& list) {
    std::vector<std::string> models;
    std::string::size_type from = 0;
    while (from <= list.size() && !list.empty()) {
      const auto comma = list.find(',', from);
      const std::string name =
          trim(comma == std::string::npos ? list.substr(from) : list.substr(from, comma - from));
      if (!name.empty()) models.push_back(name);
      if (comma == std::string::npos) break;
      from = comma + 1;
    }
    return models;
  };

  // ghosh-mandel
  struct {
    double amplitude_a = 1.0, amplitude_b = 1.0, k1 = 1.0, k2 = 0.5;
    std::string l0 = "1um", dx = "0";
    CommonFlags common;
  } gm;
  CLI::App* gm_cmd =
      app.add_subcommand("ghosh-mandel", "two-source joint detection fringes vs x1-x2");
  gm_cmd->add_option("--aA", gm.amplitude_a, "source A amplitude")->capture_default_str();
  gm_cmd->add_option("--aB", gm.amplitude_b, "source B amplitude")->capture_default_str();
  gm_cmd->add_option("--L0", gm.l0, "fringe spacing (length)")->capture_default_str();
  gm_cmd->add_option("--K1", gm.k1, "detector 1 scale factor")->capture_default_str();
  gm_cmd->add_option("--K2", gm.k2, "detector 2 scale factor")->capture_default_str();
  gm_cmd->add_option("--dx", gm.dx, "x1-x2 for point evaluation (length, L0 allowed)")
      ->capture_default_str();
  add_common(gm_cmd, gm.common);

  // eraser
  struct {
    std::string case_tag, phi = "0";
    std::optional<std::string> theta1, theta2;
    double intensity_s = 1.0, intensity_i = 1.0;
    long mc_samples = 1'000'000;
    CommonFlags common;
  } eraser;
  CLI::App* eraser_cmd =
      app.add_subcommand("eraser", "beam-splitter coincidence vs wave-plate/polarizer angles");
  eraser_cmd->add_option("--case", eraser.case_tag, "a (no polarizers), b (theta1), c (both)")
      ->check(CLI::IsMember({"a", "b", "c"}));
  eraser_cmd->add_option("--phi", eraser.phi, "half-wave-plate rotation (angle)")
      ->capture_default_str();
  eraser_cmd->add_option("--theta1", eraser.theta1, "polarizer angle at D1");
  eraser_cmd->add_option("--theta2", eraser.theta2, "polarizer angle at D2");
  eraser_cmd->add_option("--Is", eraser.intensity_s, "signal intensity")->capture_default_str();
  eraser_cmd->add_option("--Ii", eraser.intensity_i, "idler intensity")->capture_default_str();
  eraser_cmd->add_option("--mc-samples", eraser.mc_samples, "Monte Carlo sample count")
      ->capture_default_str();
  add_common(eraser_cmd, eraser.common);

  // franson
  struct {
    std::string delta_l = "63cm", lambda_p = "351nm", sigma_x = "36um";
    std::optional<std::string> sigma_k, tau;
    std::string x_s = "0", x_i = "0", mode = "narrow";
    CommonFlags common;
  } franson_flags;
  CLI::App* franson_cmd =
      app.add_subcommand("franson", "unbalanced-interferometer pair coincidence fringes");
  franson_cmd->add_option("--delta-L", franson_flags.delta_l, "long-short path difference (length)")
      ->capture_default_str();
  franson_cmd->add_option("--lambda-p", franson_flags.lambda_p, "pump wavelength (length)")
      ->capture_default_str();
  franson_cmd->add_option("--sigma-x", franson_flags.sigma_x, "packet coherence length")
      ->capture_default_str();
  CLI::Option* sigma_k_opt =
      franson_cmd->add_option("--sigma-k", franson_flags.sigma_k, "spectral width (rad/um)");
  sigma_k_opt->excludes("--sigma-x");
  franson_cmd->add_option("--x-s", franson_flags.x_s, "signal detector path position (length)")
      ->capture_default_str();
  franson_cmd->add_option("--x-i", franson_flags.x_i, "idler detector path position (length)")
      ->capture_default_str();
  franson_cmd->add_option("--mode", franson_flags.mode, "coincidence window mode")
      ->check(CLI::IsMember({"narrow", "wide"}))
      ->capture_default_str();
  franson_cmd->add_option("--tau", franson_flags.tau, "coincidence time window (time)");
  add_common(franson_cmd, franson_flags.common);

  // convert
  struct {
    std::string poly_file, modulated = "fringe";
  } convert_flags;
  CLI::App* convert_cmd =
      app.add_subcommand("convert", "apply the same-source elimination rule to a poly spec");
  convert_cmd->add_option("poly", convert_flags.poly_file, "poly spec file")->required();
  convert_cmd->add_option("--modulated-label", convert_flags.modulated,
                          "label of the fringe-modulated terms")
      ->capture_default_str();

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config_args(args);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 parse order
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (convert_cmd->parsed()) {
      const ConvertReport report =
          convert_report_from_file(convert_flags.poly_file, convert_flags.modulated);
      std::cout << report.text;
      return 0;
    }

    RunConfig config;
    const CommonFlags* common = nullptr;
    if (gm_cmd->parsed()) {
      config.experiment = ExperimentKind::GhoshMandel;
      common = &gm.common;
      config.ghosh_mandel.amplitude_a = gm.amplitude_a;
      config.ghosh_mandel.amplitude_b = gm.amplitude_b;
      config.ghosh_mandel.fringe_spacing = parse_length_um(gm.l0);
      config.ghosh_mandel.detector_scale_1 = gm.k1;
      config.ghosh_mandel.detector_scale_2 = gm.k2;
      config.point_dx = parse_length_um(gm.dx, config.ghosh_mandel.fringe_spacing);
      if (!gm.common.sweep.empty()) {
        const RawSweep raw = parse_sweep(gm.common.sweep);
        config.sweep = SweepRequest{
            raw.parameter, parse_length_um(raw.start, config.ghosh_mandel.fringe_spacing),
            parse_length_um(raw.stop, config.ghosh_mandel.fringe_spacing), raw.points};
      }
    } else if (eraser_cmd->parsed()) {
      config.experiment = ExperimentKind::Eraser;
      common = &eraser.common;
      config.eraser.phi = parse_angle_rad(eraser.phi);
      if (eraser.theta1) config.eraser.theta1 = parse_angle_rad(*eraser.theta1);
      if (eraser.theta2) config.eraser.theta2 = parse_angle_rad(*eraser.theta2);
      config.eraser.intensity_s = eraser.intensity_s;
      config.eraser.intensity_i = eraser.intensity_i;
      config.mc_samples = eraser.mc_samples;
      if (!eraser.case_tag.empty()) {
        const std::string actual = case_name(config.eraser.experiment_case());
        if (actual != eraser.case_tag)
          throw ConfigError("--case " + eraser.case_tag +
                            " is inconsistent with the polarizer angles given (they imply case " +
                            actual + ")");
      }
      if (!eraser.common.sweep.empty()) {
        const RawSweep raw = parse_sweep(eraser.common.sweep);
        config.sweep = SweepRequest{raw.parameter, parse_angle_rad(raw.start),
                                    parse_angle_rad(raw.stop), raw.points};
      }
    } else {
      config.experiment = ExperimentKind::Franson;
      common = &franson_flags.common;
      config.franson.path_difference = parse_length_um(franson_flags.delta_l);
      const double lambda_p = parse_length_um(franson_flags.lambda_p);
      if (!(lambda_p > 0.0)) throw ConfigError("pump wavelength must be positive");
      config.franson.pump_wavenumber = 2.0 * std::numbers::pi / lambda_p;
      if (franson_flags.sigma_k) {
        config.franson.sigma_k = parse_number(*franson_flags.sigma_k);
      } else {
        const double sigma_x = parse_length_um(franson_flags.sigma_x);
        if (!(sigma_x > 0.0)) throw ConfigError("sigma-x must be positive");
        config.franson.sigma_k = 1.0 / (2.0 * sigma_x);
      }
      config.franson.x_s = parse_length_um(franson_flags.x_s);
      config.franson.x_i = parse_length_um(franson_flags.x_i);
      config.franson.window =
          franson_flags.mode == "wide" ? franson::Window::Wide : franson::Window::Narrow;
      if (franson_flags.tau)
        config.franson.coincidence_path =
            parse_time_ns(*franson_flags.tau) * franson::kSpeedOfLightUmPerNs;
      if (!franson_flags.common.sweep.empty()) {
        const RawSweep raw = parse_sweep(franson_flags.common.sweep);
        config.sweep = SweepRequest{raw.parameter, parse_angle_rad(raw.start),
                                    parse_angle_rad(raw.stop), raw.points};
      }
    }

    config.models = split_models(common->models);
    config.seed = common->seed;
    config.out_path = common->out;

    const RunResult result = run(config);
    if (!result.csv.empty() && config.out_path.empty()) std::cout << result.csv << "\n";
    std::cout << result.summary;
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace twophoton::cli
