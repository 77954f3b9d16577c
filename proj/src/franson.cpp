#include "twophoton/franson.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace twophoton::franson {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_suppression_regime(const FransonConfig& cfg) {
  if (!cfg.suppression_regime())
    throw RegimeError("sigma*delta_L = " + std::to_string(cfg.regime_parameter()) +
                      " is below " + std::to_string(kSuppressionThreshold) +
                      "; the windowed closed forms are invalid outside the suppression regime");
}

void require_equal_positions(const FransonConfig& cfg, const char* what) {
  if (cfg.detector_position_s() != cfg.detector_position_i())
    throw ConfigError(std::string(what) + " requires x_s == x_i");
}

// Complex ratio of two scaled integrals; underflows cleanly to 0.
Complex scaled_ratio(const spectral::ScaledComplex& num, const spectral::ScaledComplex& den) {
  return num.mantissa / den.mantissa * std::exp(num.log_scale - den.log_scale);
}

// weighted Fourier average W(d) = <e^{i k d}> over |psi_s psi_i|^2
Complex weighted_fourier_average(const FransonConfig& cfg, double displacement) {
  const spectral::OverlapKernel kernel = cfg.kernel();
  const auto log_weight = [&kernel](Complex k) { return 2.0 * kernel.log_product(k); };
  const double center = kernel.product_center();
  const double width = kernel.product_width() / std::numbers::sqrt2;
  const auto numerator = spectral::fourier_integral(log_weight, center, width, displacement);
  const auto denominator = spectral::fourier_integral(log_weight, center, width, 0.0);
  return scaled_ratio(numerator, denominator);
}

double classical_curve(double phase, Complex w1, Complex w2) {
  const Complex carrier = std::exp(kI * phase);
  return 4.0 + 2.0 * std::cos(phase) + 4.0 * w1.real() +
         4.0 * (carrier * std::conj(w1)).real() + 2.0 * (carrier * std::conj(w2)).real();
}

}  // namespace

FransonConfig::FransonConfig(double path_difference, double pump_wavenumber,
                             spectral::SpectralAmplitude signal_spectrum,
                             double detector_position_s, double detector_position_i, Window window)
    : path_difference_(path_difference),
      pump_wavenumber_(pump_wavenumber),
      signal_spectrum_(signal_spectrum),
      detector_position_s_(detector_position_s),
      detector_position_i_(detector_position_i),
      window_(window) {
  if (!(path_difference >= 0.0)) throw ConfigError("franson: delta_L must be >= 0");
  if (!(pump_wavenumber > 0.0)) throw ConfigError("franson: pump wavenumber must be positive");
}

FransonConfig FransonConfig::with_positions(double x_s, double x_i) const {
  FransonConfig out = *this;
  out.detector_position_s_ = x_s;
  out.detector_position_i_ = x_i;
  return out;
}

spectral::OverlapKernel FransonConfig::kernel() const {
  return spectral::OverlapKernel::degenerate(signal_spectrum_, pump_wavenumber_);
}

double FransonConfig::regime_parameter() const {
  return kernel().product_width() * path_difference_;
}

TwoPhotonAmplitudes amplitudes(const FransonConfig& cfg) {
  const spectral::OverlapKernel kernel = cfg.kernel();
  const double d = cfg.detector_position_s() - cfg.detector_position_i();
  const double dl = cfg.path_difference();

  const Complex ss = spectral::overlap_integral(kernel, d);
  const Complex long_path = std::exp(-kI * cfg.pump_wavenumber() * dl);
  TwoPhotonAmplitudes a;
  a.ss = ss;
  a.ll = long_path * ss;
  a.sl = long_path * spectral::overlap_integral(kernel, d + dl);
  a.ls = std::exp(kI * cfg.pump_wavenumber() * d) * long_path *
         spectral::overlap_integral(kernel, d - dl);
  return a;
}

double coincidence_narrow(const FransonConfig& cfg) {
  require_equal_positions(cfg, "narrow-window coincidence");
  require_suppression_regime(cfg);
  const TwoPhotonAmplitudes a = amplitudes(cfg);
  return std::norm(a.ss + a.ll);
}

double coincidence_wide(const FransonConfig& cfg) {
  require_suppression_regime(cfg);
  const double dl = cfg.path_difference();
  // same-path pairs: equal effective positions
  const TwoPhotonAmplitudes same = amplitudes(cfg.with_positions(0.0, 0.0));
  // signal arrives one delta_L late or early: exactly one cross pair survives
  const TwoPhotonAmplitudes late = amplitudes(cfg.with_positions(dl, 0.0));
  const TwoPhotonAmplitudes early = amplitudes(cfg.with_positions(0.0, dl));
  return std::norm(same.ss + same.ll) + std::norm(late.ls) + std::norm(early.sl);
}

double coincidence_classical(const FransonConfig& cfg) {
  require_equal_positions(cfg, "classical coincidence");
  const double dl = cfg.path_difference();
  const Complex w1 = weighted_fourier_average(cfg, dl);
  const Complex w2 = weighted_fourier_average(cfg, 2.0 * dl);
  return classical_curve(cfg.pump_wavenumber() * dl, w1, w2);
}

FringeScan fringe_scan_range(const FransonConfig& cfg, const FringeModels& models,
                             double phase_start, double phase_stop, int points) {
  require_equal_positions(cfg, "fringe scan");
  require_suppression_regime(cfg);
  if (!(phase_stop > phase_start)) throw ConfigError("fringe scan: phase range must be increasing");
  if (points < 4) throw ScanTooCoarse("fringe scan needs at least 4 points");
  const double periods = (phase_stop - phase_start) / kTwoPi;
  if (static_cast<double>(points) < 32.0 * periods)
    throw ScanTooCoarse("fringe scan needs at least 32 points per period; got " +
                        std::to_string(points) + " over " + std::to_string(periods) + " periods");

  FringeScan scan;
  scan.parameter = "phase";
  scan.values.resize(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j)
    scan.values[static_cast<std::size_t>(j)] =
        phase_start +
        (phase_stop - phase_start) * static_cast<double>(j) / static_cast<double>(points - 1);

  // envelope quantities at the base config; the sweep only micro-shifts delta_L
  const double i0_sq = std::exp(2.0 * spectral::overlap_integral_scaled(cfg.kernel(), 0.0).abs_log());
  const double dl = cfg.path_difference();

  const auto add_curve = [&scan](const char* name, auto&& value_at) {
    std::vector<double> samples;
    samples.reserve(scan.values.size());
    for (double phase : scan.values) samples.push_back(value_at(phase));
    scan.visibilities.emplace_back(name, fit_fringe_visibility(scan.values, samples, kTwoPi));
    scan.curves.emplace_back(name, std::move(samples));
  };

  if (models.narrow)
    add_curve("narrow", [i0_sq](double phase) { return i0_sq * 2.0 * (1.0 + std::cos(phase)); });
  if (models.wide) {
    const double cross = std::norm(amplitudes(cfg.with_positions(dl, 0.0)).ls) +
                         std::norm(amplitudes(cfg.with_positions(0.0, dl)).sl);
    add_curve("wide", [i0_sq, cross](double phase) {
      return i0_sq * 2.0 * (1.0 + std::cos(phase)) + cross;
    });
  }
  if (models.classical) {
    const Complex w1 = weighted_fourier_average(cfg, dl);
    const Complex w2 = weighted_fourier_average(cfg, 2.0 * dl);
    add_curve("classical", [w1, w2](double phase) { return classical_curve(phase, w1, w2); });
  }
  return scan;
}

FringeScan fringe_scan(const FransonConfig& cfg, const FringeModels& models, double n_periods,
                       int points) {
  if (!(n_periods > 0.0)) throw ConfigError("fringe scan: n_periods must be positive");
  return fringe_scan_range(cfg, models, 0.0, n_periods * kTwoPi, points);
}

Window classify_window(double path_difference, double coincidence_path) {
  if (!(path_difference > 0.0) || !(coincidence_path > 0.0))
    throw ConfigError("window classification needs positive lengths");
  return coincidence_path < path_difference ? Window::Narrow : Window::Wide;
}

}  // namespace twophoton::franson
