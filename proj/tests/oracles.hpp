#pragma once

// Independent closed-form references for the test suite: plain Gaussian and
// trigonometric algebra, deliberately free of the library's integration and
// averaging code paths.

#include <cmath>
#include <complex>
#include <numbers>

namespace oracles {

// integral of psi_s(k) psi_i(k_p - k) e^{i k d} dk for L2-normalized
// Gaussians psi(k) = (2 pi s^2)^(-1/4) exp(-(k-k0)^2 / (4 s^2))
inline std::complex<double> gaussian_overlap(double k0s, double sigma_s, double k0i,
                                             double sigma_i, double k_p, double displacement) {
  const double vs = sigma_s * sigma_s;
  const double vi = sigma_i * sigma_i;
  const double mu1 = k0s;
  const double mu2 = k_p - k0i;
  const double eff2 = 2.0 * vs * vi / (vs + vi);  // product-function variance
  const double mu = (mu1 * vi + mu2 * vs) / (vs + vi);
  const double amp = std::pow(2.0 * std::numbers::pi * vs, -0.25) *
                     std::pow(2.0 * std::numbers::pi * vi, -0.25);
  const double cross = std::exp(-(mu1 - mu2) * (mu1 - mu2) / (4.0 * (vs + vi)));
  const double magnitude = amp * cross * std::sqrt(2.0 * std::numbers::pi * eff2) *
                           std::exp(-eff2 * displacement * displacement / 2.0);
  return magnitude * std::exp(std::complex<double>(0.0, mu * displacement));
}

// |I(d)| / |I(0)| for the degenerate kernel (identical Gaussians)
inline double suppression(double sigma_k, double displacement) {
  return std::exp(-sigma_k * sigma_k * displacement * displacement / 2.0);
}

inline double log10_suppression(double sigma_k, double displacement) {
  return -sigma_k * sigma_k * displacement * displacement / (2.0 * std::log(10.0));
}

// delta-averaged classical coincidences of the three eraser cases
inline double eraser_no_polarizers(double phi, double intensity_s, double intensity_i) {
  const double s = std::sin(phi);
  return 0.25 * (intensity_s * intensity_s + intensity_i * intensity_i) +
         0.5 * intensity_s * intensity_i * s * s;
}

inline double eraser_one_polarizer(double phi, double theta1, double intensity_s,
                                   double intensity_i) {
  const double c1 = std::cos(theta1 - phi);
  const double c2 = std::cos(theta1);
  const double s = std::sin(phi);
  return 0.25 * intensity_s * intensity_s * c1 * c1 +
         0.25 * intensity_i * intensity_i * c2 * c2 + 0.25 * intensity_s * intensity_i * s * s;
}

inline double eraser_two_polarizers(double phi, double theta1, double theta2, double intensity_s,
                                    double intensity_i) {
  const double a1 = std::cos(theta1 - phi);
  const double a2 = std::cos(theta2 - phi);
  const double b1 = std::cos(theta1);
  const double b2 = std::cos(theta2);
  const double s = std::sin(phi);
  const double cross = std::sin(theta1 - theta2);
  return 0.25 * intensity_s * intensity_s * a1 * a1 * a2 * a2 +
         0.25 * intensity_i * intensity_i * b1 * b1 * b2 * b2 +
         0.25 * intensity_s * intensity_i * s * s * cross * cross;
}

// classical four-path interferometer coincidence, brute force: Simpson rule
// on the |...|^2 integrand with the |psi psi|^2 weight, normalized
inline double franson_classical_direct(double k_p, double sigma_k, double delta_l,
                                       int intervals = 1 << 16) {
  const double center = k_p / 2.0;
  const double weight_sigma = sigma_k / std::numbers::sqrt2;
  const double half = 8.0 * weight_sigma;
  const double h = 2.0 * half / intervals;
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j <= intervals; ++j) {
    const double k = center - half + h * j;
    const double u = k - center;
    const double w = std::exp(-u * u / (2.0 * weight_sigma * weight_sigma));
    const std::complex<double> sum =
        1.0 + std::exp(std::complex<double>(0.0, -(k_p - k) * delta_l)) +
        std::exp(std::complex<double>(0.0, -k * delta_l)) +
        std::exp(std::complex<double>(0.0, -k_p * delta_l));
    const double simpson = (j == 0 || j == intervals) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    num += simpson * w * std::norm(sum);
    den += simpson * w;
  }
  return num / den;
}

}  // namespace oracles
