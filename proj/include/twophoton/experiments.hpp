#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twophoton/convert.hpp"
#include "twophoton/errors.hpp"
#include "twophoton/fields.hpp"
#include "twophoton/scan.hpp"

namespace twophoton::experiments {

inline constexpr const char* kConstLabel = "const";
inline constexpr const char* kFringeLabel = "fringe";

// Two-source interference with detection at two points x1, x2 in a distant
// plane; fringes repeat with spacing L0 along x1 - x2.
struct GhoshMandelConfig {
  double amplitude_a = 1.0;      // a_A
  double amplitude_b = 1.0;      // a_B
  double fringe_spacing = 1.0;   // L0, um
  double detector_scale_1 = 1.0; // K1
  double detector_scale_2 = 0.5; // K2 (K1*K2 = 1/2 puts the quantum peak at 2)

  void validate() const;
};

// 2 K1 K2 (1 + cos(2 pi (x1-x2)/L0)): unit visibility.
double ghosh_mandel_quantum(const GhoshMandelConfig& cfg, double x1, double x2);

// Classical closed form: same fringe with the modulation coefficient
// 2 a_A^2 a_B^2 / (a_A^2 + a_B^2)^2, at most 1/2.
double ghosh_mandel_classical(const GhoshMandelConfig& cfg, double x1, double x2);

// Same quantity from first principles: build the two-term fields at x1 and
// x2 and average the intensity product over the relative random phase.
double ghosh_mandel_classical_from_fields(const GhoshMandelConfig& cfg, double x1, double x2);

// Classical modulation coefficient (the visibility of the classical fringe).
double ghosh_mandel_visibility(const GhoshMandelConfig& cfg);

// Fringe-form intensity poly: {AA, BB, AB} constant terms plus the
// fringe-modulated AB term, labels kConstLabel / kFringeLabel.
convert::IntensityPoly ghosh_mandel_poly(const GhoshMandelConfig& cfg);

// Conversion rule applied to the delta-averaged poly at (x1, x2), scaled so
// that it coincides with the quantum curve for every amplitude pair.
double ghosh_mandel_converted(const GhoshMandelConfig& cfg, double x1, double x2);

enum class EraserCase { NoPolarizers, OnePolarizer, TwoPolarizers };  // a, b, c

struct EraserConfig {
  double phi = 0.0;                   // half-wave-plate rotation of the signal polarization
  std::optional<double> theta1;       // polarizer angle in front of D1
  std::optional<double> theta2;       // polarizer angle in front of D2
  double intensity_s = 1.0;           // I_s = A_s^2
  double intensity_i = 1.0;           // I_i = A_i^2

  EraserCase experiment_case() const;
  void validate() const;
  fields::EraserFieldConfig field_config() const;
};

enum class Model { Classical, Converted, QuantumReference };

// Classical: delta-averaged intensity product of the built fields.
// Converted: conversion rule applied to the classical poly (keeps the
//            I_s I_i proportionality factor).
// QuantumReference: (1/2) sin^2 phi, (1/4) sin^2 phi, or
//                   (1/4) sin^2 phi sin^2(theta1 - theta2) per case.
double eraser_coincidence(const EraserConfig& cfg, Model model);

double eraser_quantum_reference(const EraserConfig& cfg);

convert::IntensityPoly eraser_poly(const EraserConfig& cfg);

fields::PhaseAverage eraser_monte_carlo(const EraserConfig& cfg, long samples, std::uint64_t seed);

struct ModelSet {
  bool classical = true;
  bool converted = true;
  bool quantum = true;
  bool monte_carlo = false;
};

struct MonteCarloOptions {
  long samples = 1'000'000;
  std::uint64_t seed = 0;
};

// Sweeps x1 - x2; at least 16 points per fringe period L0, else ScanTooCoarse.
FringeScan scan_ghosh_mandel(const GhoshMandelConfig& cfg, double dx_start, double dx_stop,
                             int points, const ModelSet& models = {});

enum class EraserParameter { Phi, Theta1, Theta2 };

// Sweeps one angle; the fringes of every case repeat with period pi, and at
// least 16 points per period are required. Monte Carlo points use
// seed + point index.
FringeScan scan_eraser(const EraserConfig& cfg, EraserParameter parameter, double start,
                       double stop, int points, const ModelSet& models = {},
                       const std::optional<MonteCarloOptions>& mc = std::nullopt);

}  // namespace twophoton::experiments
