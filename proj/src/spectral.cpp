#include "twophoton/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace twophoton::spectral {

namespace {
constexpr Complex kI{0.0, 1.0};
}

SpectralAmplitude::SpectralAmplitude(double center, double width, Shape shape)
    : center_(center), width_(width), shape_(shape) {
  if (!(center > 0.0) || !std::isfinite(center))
    throw ConfigError("spectral amplitude: center wavenumber must be positive, got " +
                      std::to_string(center));
  if (!(width > 0.0) || !std::isfinite(width))
    throw ConfigError("spectral amplitude: width must be positive, got " + std::to_string(width));
  // peak of the L2-normalized Gaussian: (2 pi sigma^2)^(-1/4)
  log_norm_ = -0.25 * std::log(2.0 * std::numbers::pi * width_ * width_);
}

Complex SpectralAmplitude::evaluate(double k) const {
  const double u = k - center_;
  return {std::exp(log_norm_ - u * u / (4.0 * width_ * width_)), 0.0};
}

Complex SpectralAmplitude::log_amplitude(Complex k) const {
  const Complex u = k - center_;
  return log_norm_ - u * u / (4.0 * width_ * width_);
}

OverlapKernel::OverlapKernel(SpectralAmplitude signal, SpectralAmplitude idler,
                             double pump_wavenumber)
    : signal_(signal), idler_(idler), pump_wavenumber_(pump_wavenumber) {
  if (!(pump_wavenumber > 0.0) || !std::isfinite(pump_wavenumber))
    throw ConfigError("overlap kernel: pump wavenumber must be positive");
}

OverlapKernel OverlapKernel::degenerate(const SpectralAmplitude& signal, double pump_wavenumber) {
  SpectralAmplitude idler(pump_wavenumber - signal.center(), signal.width(), signal.shape());
  return OverlapKernel(signal, idler, pump_wavenumber);
}

double OverlapKernel::product_center() const {
  const double vs = signal_.width() * signal_.width();
  const double vi = idler_.width() * idler_.width();
  const double mu_s = signal_.center();
  const double mu_i = pump_wavenumber_ - idler_.center();  // where psi_i(k_p - k) peaks
  return (mu_s * vi + mu_i * vs) / (vs + vi);
}

double OverlapKernel::product_width() const {
  const double vs = signal_.width() * signal_.width();
  const double vi = idler_.width() * idler_.width();
  // 1/(2 s_eff^2) = 1/(4 vs) + 1/(4 vi)
  return std::sqrt(2.0 * vs * vi / (vs + vi));
}

Complex OverlapKernel::log_product(Complex k) const {
  return signal_.log_amplitude(k) + idler_.log_amplitude(pump_wavenumber_ - k);
}

Complex ScaledComplex::value() const { return mantissa * std::exp(log_scale); }

double ScaledComplex::abs_log() const { return std::log(std::abs(mantissa)) + log_scale; }

double ScaledComplex::magnitude() const { return std::exp(abs_log()); }

ScaledComplex fourier_integral(const std::function<Complex(Complex)>& log_smooth,
                               double center, double width, double displacement,
                               double rel_tol, long max_nodes) {
  const double shift = width * width * displacement;  // saddle of the Gaussian exponent
  const double half = 8.0 * width;                    // truncation tail ~ e^{-32}

  // exponent along the contour, referenced to its saddle value so the
  // summed mantissas stay O(1) no matter how small the result is
  const auto exponent = [&](double v) -> Complex {
    const Complex k(center + v, shift);
    return log_smooth(k) + kI * k * displacement;
  };
  const Complex ref = exponent(0.0);
  const auto mantissa_at = [&](double v) -> Complex { return std::exp(exponent(v) - ref); };

  long n = 32;  // intervals
  double h = 2.0 * half / static_cast<double>(n);
  Complex sum = 0.5 * (mantissa_at(-half) + mantissa_at(half));
  for (long j = 1; j < n; ++j) sum += mantissa_at(-half + h * static_cast<double>(j));
  Complex previous = sum * h;

  while (n < max_nodes) {
    // refine by inserting midpoints
    Complex odd = 0.0;
    for (long j = 0; j < n; ++j)
      odd += mantissa_at(-half + h * (static_cast<double>(j) + 0.5));
    n *= 2;
    h *= 0.5;
    const Complex current = 0.5 * previous + odd * h;

    const double change = std::abs(current - previous);
    const double scale = std::abs(current);
    if (change <= rel_tol * scale || (scale == 0.0 && change == 0.0)) {
      return {current * std::exp(kI * ref.imag()), ref.real()};
    }
    previous = current;
  }
  throw QuadratureNotConverged(
      "overlap quadrature did not reach relative tolerance " + std::to_string(rel_tol) +
      " within " + std::to_string(max_nodes) + " nodes");
}

ScaledComplex overlap_integral_scaled(const OverlapKernel& kernel, double displacement) {
  if (!std::isfinite(displacement))
    throw ConfigError("overlap integral: displacement must be finite");
  return fourier_integral([&kernel](Complex k) { return kernel.log_product(k); },
                          kernel.product_center(), kernel.product_width(), displacement);
}

Complex overlap_integral(const OverlapKernel& kernel, double displacement) {
  return overlap_integral_scaled(kernel, displacement).value();
}

double suppression_ratio(const OverlapKernel& kernel, double delta_l) {
  if (!(delta_l >= 0.0))
    throw ConfigError("suppression ratio: delta_L must be >= 0");
  const double num = overlap_integral_scaled(kernel, delta_l).abs_log();
  const double den = overlap_integral_scaled(kernel, 0.0).abs_log();
  const double ratio = std::exp(num - den);
  return ratio < 1.0 ? ratio : 1.0;
}

}  // namespace twophoton::spectral
