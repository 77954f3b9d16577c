#include "twophoton/convert.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace twophoton::convert {

SourceMultiset SourceMultiset::parse(std::string_view token) {
  SourceMultiset m;
  for (char c : token) {
    if (c == 'A' || c == 'a')
      ++m.count_a;
    else if (c == 'B' || c == 'b')
      ++m.count_b;
    else
      throw ParseError("sources token must use only A/B letters, got '" + std::string(token) + "'");
  }
  if (m.degree() > 2)
    throw ParseError("sources multiset limited to degree 2, got '" + std::string(token) + "'");
  return m;
}

SourceMultiset SourceMultiset::pair(Source x, Source y) {
  SourceMultiset m;
  ++(x == Source::A ? m.count_a : m.count_b);
  ++(y == Source::A ? m.count_a : m.count_b);
  return m;
}

std::string SourceMultiset::str() const {
  std::string s(static_cast<std::size_t>(count_a), 'A');
  s.append(static_cast<std::size_t>(count_b), 'B');
  return s.empty() ? "1" : s;
}

IntensityPoly::IntensityPoly(std::vector<PolyTerm> terms) : terms_(std::move(terms)) {
  for (const PolyTerm& t : terms_)
    if (t.sources.degree() > 2)
      throw ConfigError("intensity poly terms are limited to degree 2");
  canonicalize();
}

void IntensityPoly::add(SourceMultiset sources, double coefficient, std::string label) {
  add(PolyTerm{sources, coefficient, std::move(label)});
}

void IntensityPoly::add(const PolyTerm& term) {
  if (term.sources.degree() > 2)
    throw ConfigError("intensity poly terms are limited to degree 2");
  terms_.push_back(term);
  canonicalize();
}

void IntensityPoly::canonicalize() {
  // canonical order AA, AB, BB (descending count_a); the coefficient
  // participates in the sort key so summation order inside a (sources,
  // label) group never depends on insertion order
  std::sort(terms_.begin(), terms_.end(), [](const PolyTerm& a, const PolyTerm& b) {
    if (a.sources.count_a != b.sources.count_a) return a.sources.count_a > b.sources.count_a;
    if (a.sources.count_b != b.sources.count_b) return a.sources.count_b < b.sources.count_b;
    if (a.label != b.label) return a.label < b.label;
    return a.coefficient < b.coefficient;
  });
  std::vector<PolyTerm> merged;
  for (const PolyTerm& t : terms_) {
    if (!merged.empty() && merged.back().sources == t.sources && merged.back().label == t.label)
      merged.back().coefficient += t.coefficient;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const PolyTerm& t) { return t.coefficient == 0.0; });
  terms_ = std::move(merged);
}

double IntensityPoly::total() const {
  double sum = 0.0;
  for (const PolyTerm& t : terms_) sum += t.coefficient;
  return sum;
}

double IntensityPoly::coefficient(SourceMultiset sources) const {
  double sum = 0.0;
  for (const PolyTerm& t : terms_)
    if (t.sources == sources) sum += t.coefficient;
  return sum;
}

double IntensityPoly::coefficient(SourceMultiset sources, std::string_view label) const {
  double sum = 0.0;
  for (const PolyTerm& t : terms_)
    if (t.sources == sources && t.label == label) sum += t.coefficient;
  return sum;
}

IntensityPoly IntensityPoly::operator+(const IntensityPoly& other) const {
  std::vector<PolyTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return IntensityPoly(std::move(all));
}

bool IntensityPoly::operator==(const IntensityPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const PolyTerm& a = terms_[i];
    const PolyTerm& b = other.terms_[i];
    if (a.sources != b.sources || a.label != b.label || a.coefficient != b.coefficient)
      return false;
  }
  return true;
}

IntensityPoly apply_conversion_rule(const IntensityPoly& poly) {
  std::vector<PolyTerm> kept;
  for (const PolyTerm& t : poly.terms())
    if (!t.sources.has_repeated_source()) kept.push_back(t);
  return IntensityPoly(std::move(kept));
}

double visibility_of(const IntensityPoly& poly, const std::string& modulated_label,
                     const std::vector<std::string>& constant_labels) {
  double modulated = 0.0;
  double constant = 0.0;
  for (const PolyTerm& t : poly.terms()) {
    if (t.label == modulated_label) {
      modulated += t.coefficient;
    } else if (std::find(constant_labels.begin(), constant_labels.end(), t.label) !=
               constant_labels.end()) {
      constant += t.coefficient;
    } else {
      throw NotFringeForm("unexpected harmonic label '" + t.label + "' in fringe poly");
    }
  }
  if (!(constant > 0.0))
    throw NotFringeForm("fringe poly has non-positive mean level");
  if (std::abs(modulated) > constant)
    throw NotFringeForm("fringe poly modulation exceeds its mean level");
  return std::abs(modulated) / constant;
}

RuleGridReport verify_rule_on_grid(
    const std::function<IntensityPoly(const Params&)>& classical_model,
    const std::function<double(const Params&)>& quantum_reference,
    const std::vector<Params>& grid,
    const std::function<double(const Params&)>& shared_factor) {
  RuleGridReport report;
  report.points = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Params& point = grid[i];
    const double factor = shared_factor ? shared_factor(point) : 1.0;
    const double converted = apply_conversion_rule(classical_model(point)).total() / factor;
    const double deviation = std::abs(converted - quantum_reference(point));
    if (deviation > report.max_abs_deviation) {
      report.max_abs_deviation = deviation;
      report.worst_index = i;
    }
  }
  return report;
}

}  // namespace twophoton::convert
