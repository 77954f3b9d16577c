#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twophoton/convert.hpp"
#include "twophoton/errors.hpp"
#include "twophoton/experiments.hpp"
#include "twophoton/franson.hpp"
#include "twophoton/scan.hpp"

namespace twophoton::cli {

// Unit suffixes live at the CLI boundary; the library itself is um/rad only.
double parse_number(const std::string& text);
double parse_length_um(const std::string& text);  // nm, um, mm, cm, m; bare = um
// Additionally accepts an L0 suffix (multiples of the fringe spacing).
double parse_length_um(const std::string& text, double l0);
double parse_angle_rad(const std::string& text);  // rad, deg, pi; bare = rad
double parse_time_ns(const std::string& text);    // ps, ns, us, ms, s; bare = ns

struct SweepRequest {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
};

// "name:start:stop:points" with the value fields still unparsed (their units
// depend on the experiment and parameter).
struct RawSweep {
  std::string parameter;
  std::string start;
  std::string stop;
  int points = 0;
};
RawSweep parse_sweep(const std::string& text);

enum class ExperimentKind { GhoshMandel, Eraser, Franson };

struct FransonSettings {
  double path_difference = 630000.0;        // um
  double pump_wavenumber = 17.900812840967;  // rad/um, 2 pi / 0.351 um
  double sigma_k = 1.0 / 72.0;              // rad/um
  double x_s = 0.0;
  double x_i = 0.0;
  franson::Window window = franson::Window::Narrow;
  std::optional<double> coincidence_path;  // c*tau, um

  franson::FransonConfig build() const;
};

struct RunConfig {
  ExperimentKind experiment = ExperimentKind::GhoshMandel;
  std::vector<std::string> models;  // empty = experiment default set
  experiments::GhoshMandelConfig ghosh_mandel{};
  experiments::EraserConfig eraser{};
  FransonSettings franson{};
  std::optional<SweepRequest> sweep;
  std::optional<std::uint64_t> seed;
  long mc_samples = 1'000'000;
  double point_dx = 0.0;  // ghosh-mandel x1 - x2 for point evaluation
  std::string out_path;   // sweep CSV target; empty = stdout
};

struct RunResult {
  std::string csv;      // empty in point mode
  std::string summary;  // visibility/value lines plus regime checks
};

// Validates the config, evaluates the sweep or the single point, writes the
// CSV when out_path is set. Throws ConfigError (exit 2) or NumericalError
// (exit 3); the caller maps exceptions to exit codes.
RunResult run(const RunConfig& config);

std::string format_csv(const FringeScan& scan);

struct ConvertReport {
  convert::IntensityPoly before;
  convert::IntensityPoly after;
  std::optional<double> visibility_before;
  std::optional<double> visibility_after;
  std::string text;
};

// Reads a poly spec: one term per line, "<sources> <coefficient> [label]",
// '#' comments; the label defaults to "const" and modulated_label marks the
// fringe part for visibility extraction.
ConvertReport convert_report_from_file(const std::string& path,
                                       const std::string& modulated_label = "fringe");
ConvertReport convert_report_from_text(const std::string& text,
                                       const std::string& modulated_label = "fringe");

// Full command-line front end; returns the process exit code
// (0 ok, 2 config/parse error, 3 numerical failure).
int run_main(int argc, const char* const* argv);

}  // namespace twophoton::cli
