#include "twophoton/fields.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace twophoton::fields {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kHalfPi = std::numbers::pi / 2.0;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double wrap_phase(double phase) {
  double p = std::fmod(phase, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  return p;
}

void check_angle(double value, const char* name) {
  if (!(value >= 0.0) || !(value < kTwoPi))
    throw ConfigError(std::string(name) + " must lie in [0, 2 pi), got " + std::to_string(value));
}

// Harmonic content of one detector intensity in the random phase delta:
// I(delta) = sum_m c_m e^{i m delta}, m in {-1, 0, 1}, with each coefficient
// split by how many of the two amplitude factors came from the signal source.
struct HarmonicTable {
  // index [m + 1][signal_count], signal_count in {0, 1, 2}
  std::array<std::array<Complex, 3>, 3> c{};

  void accumulate(const FieldExpr& expr) {
    const auto& terms = expr.terms();
    for (const FieldTerm& tj : terms) {
      for (const FieldTerm& tk : terms) {
        const int m = (tj.has_random_phase ? 1 : 0) - (tk.has_random_phase ? 1 : 0);
        const int s = (tj.source == Source::Signal ? 1 : 0) + (tk.source == Source::Signal ? 1 : 0);
        c[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(s)] +=
            tj.amplitude * tk.amplitude * std::exp(kI * (tj.det_phase - tk.det_phase));
      }
    }
  }
};

HarmonicTable harmonics(const DetectorField& field) {
  HarmonicTable table;
  for (const FieldExpr& component : field.components) table.accumulate(component);
  return table;
}

// delta-average of I1 * I2 bucketed by total signal count of the four factors
std::array<Complex, 5> averaged_buckets(const HarmonicTable& a, const HarmonicTable& b) {
  std::array<Complex, 5> buckets{};
  for (int m = -1; m <= 1; ++m) {
    for (int s = 0; s <= 2; ++s) {
      for (int t = 0; t <= 2; ++t) {
        buckets[static_cast<std::size_t>(s + t)] +=
            a.c[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(s)] *
            b.c[static_cast<std::size_t>(-m + 1)][static_cast<std::size_t>(t)];
      }
    }
  }
  return buckets;
}

}  // namespace

FieldTerm make_term(double amplitude, Source source, double det_phase, bool has_random_phase) {
  if (!std::isfinite(amplitude) || !std::isfinite(det_phase))
    throw ConfigError("field term: amplitude and phase must be finite");
  if (amplitude < 0.0) {
    amplitude = -amplitude;
    det_phase += std::numbers::pi;
  }
  return FieldTerm{amplitude, source, wrap_phase(det_phase), has_random_phase};
}

FieldExpr::FieldExpr(std::initializer_list<FieldTerm> terms) : terms_(terms) {}

FieldExpr FieldExpr::scaled(double factor) const {
  FieldExpr out;
  for (const FieldTerm& t : terms_)
    out.add(make_term(t.amplitude * factor, t.source, t.det_phase, t.has_random_phase));
  return out;
}

FieldExpr FieldExpr::merged() const {
  FieldExpr out;
  for (Source source : {Source::Signal, Source::Idler}) {
    for (bool flagged : {false, true}) {
      Complex z = 0.0;
      for (const FieldTerm& t : terms_)
        if (t.source == source && t.has_random_phase == flagged)
          z += t.amplitude * std::exp(kI * t.det_phase);
      if (z != 0.0) out.add(make_term(std::abs(z), source, std::arg(z), flagged));
    }
  }
  return out;
}

Complex FieldExpr::amplitude_at(double delta) const {
  Complex z = 0.0;
  for (const FieldTerm& t : terms_)
    z += t.amplitude * std::exp(kI * (t.det_phase + (t.has_random_phase ? delta : 0.0)));
  return z;
}

double FieldExpr::intensity(double delta) const { return std::norm(amplitude_at(delta)); }

double intensity(const FieldExpr& expr, double delta) { return expr.intensity(delta); }

double DetectorField::intensity(double delta) const {
  double sum = 0.0;
  for (const FieldExpr& component : components) sum += component.intensity(delta);
  return sum;
}

PhaseAverage average_over_delta(const DetectorField& d1, const DetectorField& d2) {
  const auto buckets = averaged_buckets(harmonics(d1), harmonics(d2));
  Complex total = 0.0;
  for (const Complex& b : buckets) total += b;
  return PhaseAverage{total.real(), AverageMethod::Analytic, 0.0, 0, 0};
}

PhaseAverage average_over_delta_monte_carlo(const DetectorField& d1, const DetectorField& d2,
                                            long samples, std::uint64_t seed) {
  if (samples < 2) throw ConfigError("Monte Carlo phase average needs at least 2 samples");

  // per component: I(delta) = |A0 + e^{i delta} A1|^2
  struct Split {
    Complex fixed, random;
  };
  const auto split = [](const DetectorField& field) {
    std::vector<Split> parts;
    for (const FieldExpr& component : field.components) {
      Split s{0.0, 0.0};
      for (const FieldTerm& t : component.terms()) {
        Complex z = t.amplitude * std::exp(kI * t.det_phase);
        (t.has_random_phase ? s.random : s.fixed) += z;
      }
      parts.push_back(s);
    }
    return parts;
  };
  const std::vector<Split> parts1 = split(d1);
  const std::vector<Split> parts2 = split(d2);

  std::mt19937_64 rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long i = 0; i < samples; ++i) {
    // 53-bit uniform in [0, 1), independent of library distribution details
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const Complex z = std::exp(kI * (kTwoPi * u));
    double i1 = 0.0;
    for (const Split& s : parts1) i1 += std::norm(s.fixed + z * s.random);
    double i2 = 0.0;
    for (const Split& s : parts2) i2 += std::norm(s.fixed + z * s.random);
    const double product = i1 * i2;
    sum += product;
    sum_sq += product * product;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq / n - mean * mean) * n / (n - 1.0));
  return PhaseAverage{mean, AverageMethod::MonteCarlo, std::sqrt(variance / n), samples, seed};
}

FieldExpr apply_polarizer(const FieldExpr& horizontal, const FieldExpr& vertical, double theta) {
  FieldExpr projected = horizontal.scaled(std::cos(theta));
  const FieldExpr vertical_part = vertical.scaled(std::sin(theta));
  for (const FieldTerm& t : vertical_part.terms()) projected.add(t);
  return projected.merged();
}

std::pair<DetectorField, DetectorField> build_eraser_fields(const EraserFieldConfig& config) {
  check_angle(config.phi, "phi");
  if (config.theta1) check_angle(*config.theta1, "theta1");
  if (config.theta2) check_angle(*config.theta2, "theta2");
  if (config.theta2 && !config.theta1)
    throw ConfigError("eraser: theta2 given without theta1 (one-polarizer case uses theta1)");
  if (config.amplitude_s < 0.0 || config.amplitude_i < 0.0)
    throw ConfigError("eraser: amplitudes must be >= 0");

  const double as = config.amplitude_s * kInvSqrt2;
  const double ai = config.amplitude_i * kInvSqrt2;
  const double c = std::cos(config.phi);
  const double s = std::sin(config.phi);

  if (!config.theta1) {
    // no polarizers: H and V components at both detectors, the random phase
    // rides on the signal, one reflection phase i on the cross port
    FieldExpr d1_h{make_term(as * c, Source::Signal, 0.0, true),
                   make_term(ai, Source::Idler, kHalfPi, false)};
    FieldExpr d1_v{make_term(as * s, Source::Signal, 0.0, true)};
    FieldExpr d2_h{make_term(as * c, Source::Signal, kHalfPi, true),
                   make_term(ai, Source::Idler, 0.0, false)};
    FieldExpr d2_v{make_term(as * s, Source::Signal, kHalfPi, true)};
    return {DetectorField({d1_h, d1_v}), DetectorField({d2_h, d2_v})};
  }

  if (!config.theta2) {
    // one polarizer at D1; here the random phase rides on the idler
    FieldExpr d1_h{make_term(as * c, Source::Signal, kHalfPi, false),
                   make_term(ai, Source::Idler, 0.0, true)};
    FieldExpr d1_v{make_term(as * s, Source::Signal, kHalfPi, false)};
    FieldExpr d2_h{make_term(as * c, Source::Signal, 0.0, false),
                   make_term(ai, Source::Idler, kHalfPi, true)};
    FieldExpr d2_v{make_term(as * s, Source::Signal, 0.0, false)};
    return {DetectorField(apply_polarizer(d1_h, d1_v, *config.theta1)),
            DetectorField({d2_h, d2_v})};
  }

  // two polarizers
  FieldExpr d1_h{make_term(as * c, Source::Signal, 0.0, false),
                 make_term(ai, Source::Idler, kHalfPi, true)};
  FieldExpr d1_v{make_term(as * s, Source::Signal, 0.0, false)};
  FieldExpr d2_h{make_term(as * c, Source::Signal, kHalfPi, false),
                 make_term(ai, Source::Idler, 0.0, true)};
  FieldExpr d2_v{make_term(as * s, Source::Signal, kHalfPi, false)};
  return {DetectorField(apply_polarizer(d1_h, d1_v, *config.theta1)),
          DetectorField(apply_polarizer(d2_h, d2_v, *config.theta2))};
}

convert::IntensityPoly coincidence_poly(const DetectorField& d1, const DetectorField& d2,
                                        const std::string& label) {
  // the decomposition into I_s/I_i monomials only exists when the random
  // phase cleanly separates the two sources
  bool seen_flagged = false, seen_plain = false;
  Source flagged_source{}, plain_source{};
  for (const DetectorField* field : {&d1, &d2}) {
    for (const FieldExpr& component : field->components) {
      for (const FieldTerm& t : component.terms()) {
        if (t.amplitude == 0.0) continue;
        bool& seen = t.has_random_phase ? seen_flagged : seen_plain;
        Source& source = t.has_random_phase ? flagged_source : plain_source;
        if (seen && source != t.source)
          throw ConfigError("coincidence poly: random-phase tag does not separate the sources");
        source = t.source;
        seen = true;
      }
    }
  }
  if (seen_flagged && seen_plain && flagged_source == plain_source)
    throw ConfigError("coincidence poly: random-phase tag does not separate the sources");

  const auto buckets = averaged_buckets(harmonics(d1), harmonics(d2));
  convert::IntensityPoly poly;
  const auto bucket_value = [&buckets](int signal_count) {
    return buckets[static_cast<std::size_t>(signal_count)].real();
  };
  using convert::Source::A;
  using convert::Source::B;
  poly.add(convert::SourceMultiset::pair(A, A), bucket_value(2 + 2), label);
  poly.add(convert::SourceMultiset::pair(A, B), bucket_value(1 + 1), label);
  poly.add(convert::SourceMultiset::pair(B, B), bucket_value(0), label);
  return poly;
}

}  // namespace twophoton::fields
