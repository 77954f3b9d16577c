#include "twophoton/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace twophoton::experiments {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_scan_density(double start, double stop, int points, double period, int min_per_period) {
  if (!(stop > start)) throw ConfigError("scan range must have stop > start");
  if (points < 4) throw ScanTooCoarse("scan needs at least 4 points");
  const double periods = (stop - start) / period;
  if (static_cast<double>(points) < min_per_period * periods)
    throw ScanTooCoarse("scan needs at least " + std::to_string(min_per_period) +
                        " points per fringe period; got " + std::to_string(points) + " over " +
                        std::to_string(periods) + " periods");
}

std::vector<double> linspace(double start, double stop, int points) {
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j)
    xs[static_cast<std::size_t>(j)] =
        start + (stop - start) * static_cast<double>(j) / static_cast<double>(points - 1);
  return xs;
}

std::pair<fields::DetectorField, fields::DetectorField> ghosh_mandel_fields(
    const GhoshMandelConfig& cfg, double x1, double x2) {
  const auto field_at = [&cfg](double x) {
    fields::FieldExpr e;
    e.add(cfg.amplitude_a, fields::Source::Signal, 0.0, false);
    e.add(cfg.amplitude_b, fields::Source::Idler, kTwoPi * x / cfg.fringe_spacing, true);
    return fields::DetectorField(e);
  };
  return {field_at(x1), field_at(x2)};
}

}  // namespace

void GhoshMandelConfig::validate() const {
  if (!(fringe_spacing > 0.0)) throw ConfigError("ghosh-mandel: L0 must be positive");
  if (!(detector_scale_1 > 0.0) || !(detector_scale_2 > 0.0))
    throw ConfigError("ghosh-mandel: detector scale factors must be positive");
  if (amplitude_a < 0.0 || amplitude_b < 0.0)
    throw ConfigError("ghosh-mandel: amplitudes must be >= 0");
  if (amplitude_a == 0.0 && amplitude_b == 0.0)
    throw ConfigError("ghosh-mandel: at least one amplitude must be positive");
}

double ghosh_mandel_quantum(const GhoshMandelConfig& cfg, double x1, double x2) {
  cfg.validate();
  return 2.0 * cfg.detector_scale_1 * cfg.detector_scale_2 *
         (1.0 + std::cos(kTwoPi * (x1 - x2) / cfg.fringe_spacing));
}

double ghosh_mandel_visibility(const GhoshMandelConfig& cfg) {
  cfg.validate();
  const double ia = cfg.amplitude_a * cfg.amplitude_a;
  const double ib = cfg.amplitude_b * cfg.amplitude_b;
  return 2.0 * ia * ib / ((ia + ib) * (ia + ib));
}

double ghosh_mandel_classical(const GhoshMandelConfig& cfg, double x1, double x2) {
  return 2.0 * cfg.detector_scale_1 * cfg.detector_scale_2 *
         (1.0 + ghosh_mandel_visibility(cfg) * std::cos(kTwoPi * (x1 - x2) / cfg.fringe_spacing));
}

double ghosh_mandel_classical_from_fields(const GhoshMandelConfig& cfg, double x1, double x2) {
  cfg.validate();
  const auto [d1, d2] = ghosh_mandel_fields(cfg, x1, x2);
  const double mean_total =
      cfg.amplitude_a * cfg.amplitude_a + cfg.amplitude_b * cfg.amplitude_b;
  return 2.0 * cfg.detector_scale_1 * cfg.detector_scale_2 *
         fields::average_over_delta(d1, d2).value / (mean_total * mean_total);
}

convert::IntensityPoly ghosh_mandel_poly(const GhoshMandelConfig& cfg) {
  cfg.validate();
  const double ia = cfg.amplitude_a * cfg.amplitude_a;
  const double ib = cfg.amplitude_b * cfg.amplitude_b;
  using convert::Source;
  convert::IntensityPoly poly;
  poly.add(convert::SourceMultiset::pair(Source::A, Source::A), ia * ia, kConstLabel);
  poly.add(convert::SourceMultiset::pair(Source::B, Source::B), ib * ib, kConstLabel);
  poly.add(convert::SourceMultiset::pair(Source::A, Source::B), 2.0 * ia * ib, kConstLabel);
  poly.add(convert::SourceMultiset::pair(Source::A, Source::B), 2.0 * ia * ib, kFringeLabel);
  return poly;
}

double ghosh_mandel_converted(const GhoshMandelConfig& cfg, double x1, double x2) {
  cfg.validate();
  const double ia = cfg.amplitude_a * cfg.amplitude_a;
  const double ib = cfg.amplitude_b * cfg.amplitude_b;
  if (ia * ib == 0.0) return 0.0;  // a single source leaves no cross term
  const auto [d1, d2] = ghosh_mandel_fields(cfg, x1, x2);
  const auto converted = convert::apply_conversion_rule(fields::coincidence_poly(d1, d2));
  return cfg.detector_scale_1 * cfg.detector_scale_2 * converted.total() / (ia * ib);
}

EraserCase EraserConfig::experiment_case() const {
  if (theta1 && theta2) return EraserCase::TwoPolarizers;
  if (theta1) return EraserCase::OnePolarizer;
  return EraserCase::NoPolarizers;
}

void EraserConfig::validate() const {
  if (theta2 && !theta1)
    throw ConfigError("eraser: theta2 given without theta1 (one-polarizer case uses theta1)");
  if (intensity_s < 0.0 || intensity_i < 0.0)
    throw ConfigError("eraser: intensities must be >= 0");
}

fields::EraserFieldConfig EraserConfig::field_config() const {
  validate();
  return fields::EraserFieldConfig{phi, theta1, theta2, std::sqrt(intensity_s),
                                   std::sqrt(intensity_i)};
}

double eraser_quantum_reference(const EraserConfig& cfg) {
  cfg.validate();
  const double s = std::sin(cfg.phi);
  switch (cfg.experiment_case()) {
    case EraserCase::NoPolarizers:
      return 0.5 * s * s;
    case EraserCase::OnePolarizer:
      return 0.25 * s * s;
    case EraserCase::TwoPolarizers: {
      const double cross = std::sin(*cfg.theta1 - *cfg.theta2);
      return 0.25 * s * s * cross * cross;
    }
  }
  return 0.0;
}

convert::IntensityPoly eraser_poly(const EraserConfig& cfg) {
  const auto [d1, d2] = fields::build_eraser_fields(cfg.field_config());
  return fields::coincidence_poly(d1, d2);
}

double eraser_coincidence(const EraserConfig& cfg, Model model) {
  switch (model) {
    case Model::Classical: {
      const auto [d1, d2] = fields::build_eraser_fields(cfg.field_config());
      return fields::average_over_delta(d1, d2).value;
    }
    case Model::Converted:
      return convert::apply_conversion_rule(eraser_poly(cfg)).total();
    case Model::QuantumReference:
      return eraser_quantum_reference(cfg);
  }
  return 0.0;
}

fields::PhaseAverage eraser_monte_carlo(const EraserConfig& cfg, long samples,
                                        std::uint64_t seed) {
  const auto [d1, d2] = fields::build_eraser_fields(cfg.field_config());
  return fields::average_over_delta_monte_carlo(d1, d2, samples, seed);
}

FringeScan scan_ghosh_mandel(const GhoshMandelConfig& cfg, double dx_start, double dx_stop,
                             int points, const ModelSet& models) {
  cfg.validate();
  check_scan_density(dx_start, dx_stop, points, cfg.fringe_spacing, 16);

  FringeScan scan;
  scan.parameter = "dx";
  scan.values = linspace(dx_start, dx_stop, points);

  const auto add_curve = [&scan, &cfg](const char* name, auto&& model) {
    std::vector<double> samples;
    samples.reserve(scan.values.size());
    for (double dx : scan.values) samples.push_back(model(cfg, dx, 0.0));
    scan.visibilities.emplace_back(
        name, fit_fringe_visibility(scan.values, samples, cfg.fringe_spacing));
    scan.curves.emplace_back(name, std::move(samples));
  };
  if (models.classical) add_curve("classical", ghosh_mandel_classical_from_fields);
  if (models.converted) add_curve("converted", ghosh_mandel_converted);
  if (models.quantum) add_curve("quantum", ghosh_mandel_quantum);
  return scan;
}

FringeScan scan_eraser(const EraserConfig& cfg, EraserParameter parameter, double start,
                       double stop, int points, const ModelSet& models,
                       const std::optional<MonteCarloOptions>& mc) {
  cfg.validate();
  if (parameter == EraserParameter::Theta1 && !cfg.theta1)
    throw ConfigError("eraser scan: theta1 swept but the case has no polarizer at D1");
  if (parameter == EraserParameter::Theta2 && !cfg.theta2)
    throw ConfigError("eraser scan: theta2 swept but the case has no polarizer at D2");
  check_scan_density(start, stop, points, std::numbers::pi, 16);
  if (models.monte_carlo && !mc)
    throw ConfigError("eraser scan: Monte Carlo model requested without samples/seed");

  FringeScan scan;
  scan.parameter = parameter == EraserParameter::Phi
                       ? "phi"
                       : (parameter == EraserParameter::Theta1 ? "theta1" : "theta2");
  scan.values = linspace(start, stop, points);

  const auto at = [&cfg, parameter](double value) {
    EraserConfig c = cfg;
    switch (parameter) {
      case EraserParameter::Phi: c.phi = value; break;
      case EraserParameter::Theta1: c.theta1 = value; break;
      case EraserParameter::Theta2: c.theta2 = value; break;
    }
    return c;
  };

  const auto add_curve = [&scan](const char* name, auto&& evaluate) {
    std::vector<double> samples;
    samples.reserve(scan.values.size());
    for (std::size_t j = 0; j < scan.values.size(); ++j) samples.push_back(evaluate(j));
    scan.visibilities.emplace_back(name,
                                   fit_fringe_visibility(scan.values, samples, std::numbers::pi));
    scan.curves.emplace_back(name, std::move(samples));
  };
  if (models.classical)
    add_curve("classical", [&](std::size_t j) {
      return eraser_coincidence(at(scan.values[j]), Model::Classical);
    });
  if (models.converted)
    add_curve("converted", [&](std::size_t j) {
      return eraser_coincidence(at(scan.values[j]), Model::Converted);
    });
  if (models.quantum)
    add_curve("quantum", [&](std::size_t j) {
      return eraser_coincidence(at(scan.values[j]), Model::QuantumReference);
    });
  if (models.monte_carlo)
    add_curve("montecarlo", [&](std::size_t j) {
      return eraser_monte_carlo(at(scan.values[j]), mc->samples, mc->seed + j).value;
    });
  return scan;
}

}  // namespace twophoton::experiments
