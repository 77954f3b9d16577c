#include "twophoton/scan.hpp"

#include <cmath>
#include <numbers>

#include "twophoton/errors.hpp"

namespace twophoton {

const std::vector<double>* FringeScan::curve(std::string_view model) const {
  for (const auto& [name, samples] : curves)
    if (name == model) return &samples;
  return nullptr;
}

std::optional<double> FringeScan::visibility(std::string_view model) const {
  for (const auto& [name, v] : visibilities)
    if (name == model) return v;
  return std::nullopt;
}

double fit_fringe_visibility(std::span<const double> x, std::span<const double> y, double period) {
  if (x.size() != y.size() || x.size() < 3)
    throw ConfigError("fringe fit needs at least 3 samples");
  if (!(period > 0.0)) throw ConfigError("fringe fit needs a positive period");

  const double omega = 2.0 * std::numbers::pi / period;
  // normal equations for the basis {1, cos, sin}
  double m[3][3] = {};
  double rhs[3] = {};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double basis[3] = {1.0, std::cos(omega * x[i]), std::sin(omega * x[i])};
    for (int r = 0; r < 3; ++r) {
      rhs[r] += basis[r] * y[i];
      for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
    }
  }

  // 3x3 Gaussian elimination with partial pivoting
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[perm[r]][col]) > std::abs(m[perm[pivot]][col])) pivot = r;
    std::swap(perm[col], perm[pivot]);
    const double diag = m[perm[col]][col];
    if (diag == 0.0) throw ConfigError("fringe fit is degenerate on this sample grid");
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[perm[r]][col] / diag;
      for (int c = col; c < 3; ++c) m[perm[r]][c] -= f * m[perm[col]][c];
      rhs[perm[r]] -= f * rhs[perm[col]];
    }
  }
  double sol[3];
  for (int r = 2; r >= 0; --r) {
    double v = rhs[perm[r]];
    for (int c = r + 1; c < 3; ++c) v -= m[perm[r]][c] * sol[c];
    sol[r] = v / m[perm[r]][r];
  }

  const double mean = sol[0];
  const double amplitude = std::hypot(sol[1], sol[2]);
  if (!(mean > 0.0)) return 0.0;
  const double v = amplitude / mean;
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace twophoton
