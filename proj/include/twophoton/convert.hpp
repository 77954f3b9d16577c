#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "twophoton/errors.hpp"

namespace twophoton::convert {

enum class Source { A, B };  // A = signal, B = idler in the eraser naming

// Multiset of at most two source tags: the monomial key I_A^count_a I_B^count_b.
// Two-photon coincidences are bilinear in intensities, so degree <= 2.
struct SourceMultiset {
  int count_a = 0;
  int count_b = 0;

  static SourceMultiset parse(std::string_view token);  // "A", "B", "AA", "AB", "BB"
  static SourceMultiset pair(Source x, Source y);

  int degree() const { return count_a + count_b; }
  bool has_repeated_source() const { return count_a >= 2 || count_b >= 2; }
  std::string str() const;

  auto operator<=>(const SourceMultiset&) const = default;
};

struct PolyTerm {
  SourceMultiset sources;
  double coefficient = 0.0;
  std::string label;  // distinguishes e.g. constant from fringe-modulated parts
};

// Sum of source-tagged intensity monomials, kept in canonical form: terms
// sorted by (sources, label, coefficient) and merged on (sources, label),
// exact zero coefficients dropped.
class IntensityPoly {
 public:
  IntensityPoly() = default;
  explicit IntensityPoly(std::vector<PolyTerm> terms);

  void add(SourceMultiset sources, double coefficient, std::string label = {});
  void add(const PolyTerm& term);

  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  double total() const;  // sum of all coefficients (the poly's numeric value)
  double coefficient(SourceMultiset sources) const;  // summed over labels
  double coefficient(SourceMultiset sources, std::string_view label) const;

  IntensityPoly operator+(const IntensityPoly& other) const;
  bool operator==(const IntensityPoly& other) const;

 private:
  void canonicalize();
  std::vector<PolyTerm> terms_;
};

// Delete every monomial whose sources multiset repeats a source: products of
// intensities of waves from the same place carry no coincidences once each
// packet can trigger only one click.
IntensityPoly apply_conversion_rule(const IntensityPoly& poly);

// For a poly representing C(theta) = c0 + c1 cos(theta), with the modulated
// part identified by label, returns |c1|/c0. Throws NotFringeForm when a term
// carries an unexpected label or when c0 < |c1| or c0 <= 0.
double visibility_of(const IntensityPoly& poly, const std::string& modulated_label,
                     const std::vector<std::string>& constant_labels);

using Params = std::vector<double>;

struct RuleGridReport {
  double max_abs_deviation = 0.0;
  std::size_t points = 0;
  std::size_t worst_index = 0;
};

// Applies the conversion rule to the classical model at every grid point and
// compares against the quantum reference, after dividing out the shared
// proportionality factor (typically I_s * I_i). Deviations are data, not errors.
RuleGridReport verify_rule_on_grid(
    const std::function<IntensityPoly(const Params&)>& classical_model,
    const std::function<double(const Params&)>& quantum_reference,
    const std::vector<Params>& grid,
    const std::function<double(const Params&)>& shared_factor = {});

}  // namespace twophoton::convert
