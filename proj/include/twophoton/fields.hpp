#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twophoton/convert.hpp"
#include "twophoton/errors.hpp"

namespace twophoton::fields {

using Complex = std::complex<double>;

enum class Source { Signal, Idler };  // A and B of the two-source picture

// One plane-wave term of a detected field: amplitude * e^{i det_phase},
// times e^{i delta} when it carries the signal/idler relative random phase.
struct FieldTerm {
  double amplitude = 0.0;  // >= 0
  Source source = Source::Signal;
  double det_phase = 0.0;  // radians, stored in [0, 2 pi)
  bool has_random_phase = false;
};

// Folds a negative amplitude into a pi phase jump and reduces mod 2 pi.
FieldTerm make_term(double amplitude, Source source, double det_phase, bool has_random_phase);

// Coherent sum of terms: one polarization component at one detector.
class FieldExpr {
 public:
  FieldExpr() = default;
  FieldExpr(std::initializer_list<FieldTerm> terms);

  void add(const FieldTerm& term) { terms_.push_back(term); }
  void add(double amplitude, Source source, double det_phase, bool has_random_phase) {
    terms_.push_back(make_term(amplitude, source, det_phase, has_random_phase));
  }
  const std::vector<FieldTerm>& terms() const { return terms_; }

  FieldExpr scaled(double factor) const;
  // Combines terms sharing (source, random-phase tag) by complex addition.
  FieldExpr merged() const;

  Complex amplitude_at(double delta) const;
  double intensity(double delta) const;

 private:
  std::vector<FieldTerm> terms_;
};

double intensity(const FieldExpr& expr, double delta);

// A detector sees the sum of the intensities of its polarization components;
// the components do not interfere with each other.
struct DetectorField {
  std::vector<FieldExpr> components;

  DetectorField() = default;
  DetectorField(FieldExpr single) : components{std::move(single)} {}
  DetectorField(std::vector<FieldExpr> parts) : components(std::move(parts)) {}

  double intensity(double delta) const;
};

enum class AverageMethod { Analytic, MonteCarlo };

struct PhaseAverage {
  double value = 0.0;
  AverageMethod method = AverageMethod::Analytic;
  double std_error = 0.0;  // Monte Carlo standard-error estimate, 0 for analytic
  long samples = 0;
  std::uint64_t seed = 0;
};

// (1/2pi) integral of I1(delta) I2(delta) d delta, done exactly: both
// intensities expand into harmonics e^{i n delta}, n in {-1,0,1}, and only the
// n-balanced products survive the average.
PhaseAverage average_over_delta(const DetectorField& d1, const DetectorField& d2);

// Same average by the sample mean over uniform delta in [0, 2pi); reproducible
// for a given seed.
PhaseAverage average_over_delta_monte_carlo(const DetectorField& d1, const DetectorField& d2,
                                            long samples, std::uint64_t seed);

// Projects the H/V components at one detector onto the polarizer axis at
// angle theta to the horizontal: cos(theta) H + sin(theta) V, merged.
FieldExpr apply_polarizer(const FieldExpr& horizontal, const FieldExpr& vertical, double theta);

// Eraser geometry inputs. phi is the half-wave-plate rotation applied to the
// signal polarization; theta1/theta2 are the optional polarizer angles in
// front of D1 and D2. Amplitudes are the raw field amplitudes A_s, A_i.
struct EraserFieldConfig {
  double phi = 0.0;
  std::optional<double> theta1;
  std::optional<double> theta2;
  double amplitude_s = 1.0;
  double amplitude_i = 1.0;
};

// Builds the fields at D1 and D2 behind the symmetric beam splitter:
// 1/sqrt(2) per split, e^{i pi/2} per reflection, cos/sin phi from the wave
// plate, polarizer projections when angles are given, and the shared random
// phase on one source. Throws ConfigError for theta2 without theta1 or
// angles outside [0, 2 pi).
std::pair<DetectorField, DetectorField> build_eraser_fields(const EraserFieldConfig& config);

// The delta-averaged coincidence as a source-tagged intensity polynomial
// (monomials I_s^2, I_s I_i, I_i^2), suitable for the conversion rule.
// Requires the random-phase tag to separate the two sources.
convert::IntensityPoly coincidence_poly(const DetectorField& d1, const DetectorField& d2,
                                        const std::string& label = {});

}  // namespace twophoton::fields
