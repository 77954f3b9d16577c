#pragma once

#include <complex>
#include <functional>

#include "twophoton/errors.hpp"

namespace twophoton::spectral {

using Complex = std::complex<double>;

enum class Shape { Gaussian };

// Normalized spectral amplitude of a one-photon packet: integral of
// |psi(k)|^2 over k equals 1. Wavenumbers are rad/um throughout.
class SpectralAmplitude {
 public:
  SpectralAmplitude(double center, double width, Shape shape = Shape::Gaussian);

  double center() const { return center_; }
  double width() const { return width_; }
  Shape shape() const { return shape_; }

  // Coherence length sigma_x = 1/(2 sigma_k).
  double position_width() const { return 1.0 / (2.0 * width_); }

  Complex evaluate(double k) const;

  // log psi at complex k (the Gaussian extends to an entire function);
  // used by the contour-shifted quadrature.
  Complex log_amplitude(Complex k) const;

 private:
  double center_;
  double width_;
  double log_norm_;  // log of the peak value
  Shape shape_;
};

// Product function psi_s(k) * psi_i(k_p - k): the joint spectral kernel with
// the pair constraint k_s + k_i = k_p folded in. It cannot be factored back
// into independent signal/idler packets once the constraint is applied.
class OverlapKernel {
 public:
  OverlapKernel(SpectralAmplitude signal, SpectralAmplitude idler, double pump_wavenumber);

  // Idler mirrored about k_p/2 so both photons share one spectral shape.
  static OverlapKernel degenerate(const SpectralAmplitude& signal, double pump_wavenumber);

  const SpectralAmplitude& signal() const { return signal_; }
  const SpectralAmplitude& idler() const { return idler_; }
  double pump_wavenumber() const { return pump_wavenumber_; }

  // Center and std-width of the (Gaussian) product function.
  double product_center() const;
  double product_width() const;

  Complex log_product(Complex k) const;

 private:
  SpectralAmplitude signal_;
  SpectralAmplitude idler_;
  double pump_wavenumber_;
};

// Complex value stored as mantissa * exp(log_scale) so overlap magnitudes far
// below DBL_MIN (deep suppression regime) remain comparable.
struct ScaledComplex {
  Complex mantissa{0.0, 0.0};
  double log_scale = 0.0;

  Complex value() const;   // may underflow to 0 for very negative log_scale
  double abs_log() const;  // log|value|, -inf when mantissa is 0
  double magnitude() const;
};

// integral of exp(log_smooth(k) + i k displacement) dk, where log_smooth is
// the log of a Gaussian-like analytic kernel with the given center and
// std-width. Evaluated by trapezoid sums with node doubling on the contour
// k = center + v + i width^2 displacement, v in [-8 width, +8 width]; the
// shift moves the contour through the saddle so the integrand stops
// oscillating. Throws QuadratureNotConverged when the relative change
// between refinements has not reached rel_tol within max_nodes.
ScaledComplex fourier_integral(const std::function<Complex(Complex)>& log_smooth,
                               double center, double width, double displacement,
                               double rel_tol = 1e-8, long max_nodes = 1L << 20);

// I(d) = integral of psi_s(k) psi_i(k_p - k) exp(i k d) dk.
ScaledComplex overlap_integral_scaled(const OverlapKernel& kernel, double displacement);
Complex overlap_integral(const OverlapKernel& kernel, double displacement);

// |I(delta_L)| / |I(0)|, the factor by which cross-path amplitudes are
// suppressed; underflows cleanly to 0 for huge sigma_k * delta_L.
double suppression_ratio(const OverlapKernel& kernel, double delta_l);

}  // namespace twophoton::spectral
