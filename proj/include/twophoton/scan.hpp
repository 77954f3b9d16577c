#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twophoton {

// A sampled coincidence curve per model over one swept parameter, plus the
// visibility V = (C_max - C_min)/(C_max + C_min) extracted per model.
struct FringeScan {
  std::string parameter;
  std::vector<double> values;
  std::vector<std::pair<std::string, std::vector<double>>> curves;
  std::vector<std::pair<std::string, double>> visibilities;

  const std::vector<double>* curve(std::string_view model) const;
  std::optional<double> visibility(std::string_view model) const;
};

// Least-squares fit of y ~ c0 + a cos(2 pi x / period) + b sin(...) with the
// fringe period known in advance; returns hypot(a, b)/c0 clamped to [0, 1].
double fit_fringe_visibility(std::span<const double> x, std::span<const double> y, double period);

}  // namespace twophoton
