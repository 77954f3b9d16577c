#pragma once

#include <complex>

#include "twophoton/errors.hpp"
#include "twophoton/scan.hpp"
#include "twophoton/spectral.hpp"

namespace twophoton::franson {

using Complex = std::complex<double>;

// Minimum sigma_k * delta_L for the closed-form window formulas: at this
// value the cross-path overlap is already e^{-200} of the direct one.
inline constexpr double kSuppressionThreshold = 20.0;

inline constexpr double kSpeedOfLightUmPerNs = 299792.458;

enum class Window { Narrow, Wide };

// Each photon passes an unbalanced interferometer with long-short path
// difference delta_L; detectors sit at optical path positions x_s, x_i.
// Lengths in um, wavenumbers in rad/um. The idler spectrum is the signal's
// mirror about k_p/2.
class FransonConfig {
 public:
  FransonConfig(double path_difference, double pump_wavenumber,
                spectral::SpectralAmplitude signal_spectrum, double detector_position_s = 0.0,
                double detector_position_i = 0.0, Window window = Window::Narrow);

  double path_difference() const { return path_difference_; }
  double pump_wavenumber() const { return pump_wavenumber_; }
  const spectral::SpectralAmplitude& signal_spectrum() const { return signal_spectrum_; }
  double detector_position_s() const { return detector_position_s_; }
  double detector_position_i() const { return detector_position_i_; }
  Window window() const { return window_; }

  FransonConfig with_positions(double x_s, double x_i) const;

  spectral::OverlapKernel kernel() const;
  // sigma * delta_L with sigma the width of the joint spectral product.
  double regime_parameter() const;
  bool suppression_regime() const { return regime_parameter() >= kSuppressionThreshold; }

 private:
  double path_difference_;
  double pump_wavenumber_;
  spectral::SpectralAmplitude signal_spectrum_;
  double detector_position_s_;
  double detector_position_i_;
  Window window_;
};

// The four path-combination amplitudes (short/long per arm). ll is ss times
// the pure phase e^{-i k_p delta_L}, so |ll| = |ss| always; sl and ls carry
// displaced overlap integrals and vanish in the suppression regime.
struct TwoPhotonAmplitudes {
  Complex ss, ll, sl, ls;
};

TwoPhotonAmplitudes amplitudes(const FransonConfig& cfg);

// |ss + ll|^2 = |I(0)|^2 2 (1 + cos k_p delta_L): unit-visibility fringe.
// Requires x_s == x_i and the suppression regime (RegimeError otherwise).
double coincidence_narrow(const FransonConfig& cfg);

// Sum of the three wide-window detection events: same-path coincidences at
// zero displacement plus one surviving cross amplitude at each of +-delta_L;
// totals |I(0)|^2 4 (1 + cos(k_p delta_L)/2), visibility 1/2.
double coincidence_wide(const FransonConfig& cfg);

// Classical narrow-band pulses: per-k four-path phase sum, squared, then
// averaged over k with weight |psi(k) psi(k_p - k)|^2. Exact at every
// delta_L; in the suppression regime the k-oscillatory harmonics die and
// 4 (1 + cos(k_p delta_L)/2) remains: visibility 1/2. Normalized so the
// single-path product is 1 (all paths in phase at delta_L = 0 give 16).
double coincidence_classical(const FransonConfig& cfg);

struct FringeModels {
  bool narrow = true;
  bool wide = true;
  bool classical = true;
};

// Sweeps the carrier phase k_p delta_L over [phase_start, phase_stop] by
// micro-shifts of delta_L (lambda-scale, so the overlap envelope is constant
// and computed once at the base config). Needs 32+ points per period and the
// suppression regime.
FringeScan fringe_scan_range(const FransonConfig& cfg, const FringeModels& models,
                             double phase_start, double phase_stop, int points);

FringeScan fringe_scan(const FransonConfig& cfg, const FringeModels& models, double n_periods,
                       int points);

// Narrow when the distance light travels within the coincidence window is
// shorter than the path difference.
Window classify_window(double path_difference, double coincidence_path);

}  // namespace twophoton::franson
