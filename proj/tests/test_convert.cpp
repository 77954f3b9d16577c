#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "twophoton/convert.hpp"
#include "twophoton/experiments.hpp"

using namespace twophoton;
using convert::IntensityPoly;
using convert::PolyTerm;
using convert::SourceMultiset;

namespace {

const SourceMultiset kAA = SourceMultiset::parse("AA");
const SourceMultiset kAB = SourceMultiset::parse("AB");
const SourceMultiset kBB = SourceMultiset::parse("BB");

IntensityPoly random_poly(std::mt19937& rng) {
  static const std::vector<std::string> tokens{"A", "B", "AA", "AB", "BB"};
  static const std::vector<std::string> labels{"", "const", "fringe"};
  std::uniform_real_distribution<double> coefficient(-2.0, 2.0);
  std::vector<PolyTerm> terms;
  const int n = static_cast<int>(rng() % 7);
  for (int i = 0; i < n; ++i)
    terms.push_back(PolyTerm{SourceMultiset::parse(tokens[rng() % tokens.size()]),
                             coefficient(rng), labels[rng() % labels.size()]});
  return IntensityPoly(std::move(terms));
}

}  // namespace

TEST_CASE("sources token parsing") {
  CHECK(SourceMultiset::parse("AB") == SourceMultiset::pair(convert::Source::A, convert::Source::B));
  CHECK(SourceMultiset::parse("ba") == SourceMultiset::parse("AB"));  // order-free multiset
  CHECK(SourceMultiset::parse("A").degree() == 1);
  CHECK(SourceMultiset::parse("AA").has_repeated_source());
  CHECK(!SourceMultiset::parse("AB").has_repeated_source());
  CHECK_THROWS_AS(SourceMultiset::parse("ABB"), ParseError);
  CHECK_THROWS_AS(SourceMultiset::parse("AxB"), ParseError);
}

TEST_CASE("conversion rule removes same-source products and keeps cross terms") {
  IntensityPoly poly;
  poly.add(kAA, 1.0, "const");
  poly.add(kBB, 1.0, "const");
  poly.add(kAB, 2.0, "const");
  poly.add(kAB, 2.0, "fringe");

  const IntensityPoly converted = convert::apply_conversion_rule(poly);
  CHECK(converted.size() == 2);
  CHECK(converted.coefficient(kAA) == 0.0);
  CHECK(converted.coefficient(kBB) == 0.0);
  CHECK(converted.coefficient(kAB) == 4.0);

  // visibility climbs from 1/2 to 1 for equal source intensities
  CHECK(convert::visibility_of(poly, "fringe", {"const"}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(convert::visibility_of(converted, "fringe", {"const"}) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("a pure cross term is a fixed point of the rule") {
  IntensityPoly poly;
  poly.add(kAB, 0.77, "x");
  CHECK(convert::apply_conversion_rule(poly) == poly);
}

TEST_CASE("no-polarizer poly collapses onto its cross term") {
  // 1/4 I_s^2 + 1/4 I_i^2 + 1/2 I_s I_i sin^2 phi -> 1/2 I_s I_i sin^2 phi
  const double phi = 0.9;
  IntensityPoly poly;
  poly.add(kAA, 0.25, "");
  poly.add(kBB, 0.25, "");
  poly.add(kAB, 0.5 * std::sin(phi) * std::sin(phi), "");
  const IntensityPoly converted = convert::apply_conversion_rule(poly);
  CHECK(converted.size() == 1);
  CHECK(converted.total() == doctest::Approx(0.5 * std::sin(phi) * std::sin(phi)));
}

TEST_CASE("visibility extraction") {
  SUBCASE("unit fringe: 1 + cos") {
    IntensityPoly poly;
    poly.add(kAB, 1.0, "const");
    poly.add(kAB, 1.0, "fringe");
    CHECK(convert::visibility_of(poly, "fringe", {"const"}) == 1.0);
  }
  SUBCASE("no modulation means zero visibility") {
    IntensityPoly poly;
    poly.add(kAA, 2.0, "const");
    CHECK(convert::visibility_of(poly, "fringe", {"const"}) == 0.0);
  }
  SUBCASE("unknown labels are rejected") {
    IntensityPoly poly;
    poly.add(kAB, 1.0, "cos2theta");
    CHECK_THROWS_AS(convert::visibility_of(poly, "fringe", {"const"}), NotFringeForm);
  }
  SUBCASE("modulation above the mean is rejected") {
    IntensityPoly poly;
    poly.add(kAB, 0.5, "const");
    poly.add(kAB, 1.0, "fringe");
    CHECK_THROWS_AS(convert::visibility_of(poly, "fringe", {"const"}), NotFringeForm);
  }
  SUBCASE("non-positive mean is rejected") {
    IntensityPoly poly;
    poly.add(kAB, -1.0, "const");
    CHECK_THROWS_AS(convert::visibility_of(poly, "fringe", {"const"}), NotFringeForm);
  }
}

TEST_CASE("rule is idempotent, order-independent and linear on random polys") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 300; ++i) {
    const IntensityPoly p = random_poly(rng);
    const IntensityPoly q = random_poly(rng);

    const IntensityPoly once = convert::apply_conversion_rule(p);
    CHECK(convert::apply_conversion_rule(once) == once);

    std::vector<PolyTerm> shuffled = p.terms();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(convert::apply_conversion_rule(IntensityPoly(shuffled)) == once);

    CHECK(convert::apply_conversion_rule(p + q) ==
          convert::apply_conversion_rule(p) + convert::apply_conversion_rule(q));
  }
}

TEST_CASE("canonical form merges labels and drops exact zeros") {
  IntensityPoly poly;
  poly.add(kAB, 1.5, "const");
  poly.add(kAB, 0.5, "const");
  poly.add(kAA, 0.0, "const");
  CHECK(poly.size() == 1);
  CHECK(poly.coefficient(kAB, "const") == 2.0);
  CHECK(poly.coefficient(kAA) == 0.0);
}

TEST_CASE("degree above two is rejected") {
  IntensityPoly poly;
  CHECK_THROWS_AS(poly.add(convert::SourceMultiset{2, 1}, 1.0, ""), ConfigError);
}

TEST_CASE("rule verification on the eraser grids matches the quantum references") {
  using experiments::EraserConfig;
  const auto grid_for = [](int per_axis) {
    std::vector<convert::Params> grid;
    for (int i = 0; i < per_axis; ++i)
      for (int j = 0; j < per_axis; ++j)
        for (int k = 0; k < per_axis; ++k)
          grid.push_back({2.0 * std::numbers::pi * i / per_axis,
                          2.0 * std::numbers::pi * j / per_axis,
                          2.0 * std::numbers::pi * k / per_axis});
    return grid;
  };
  const std::vector<convert::Params> grid = grid_for(8);
  const double is = 1.21;
  const double ii = 0.64;
  const auto factor = [is, ii](const convert::Params&) { return is * ii; };

  SUBCASE("no polarizers vs (1/2) sin^2 phi") {
    const auto report = convert::verify_rule_on_grid(
        [&](const convert::Params& p) {
          return experiments::eraser_poly(EraserConfig{p[0], std::nullopt, std::nullopt, is, ii});
        },
        [](const convert::Params& p) {
          return 0.5 * std::sin(p[0]) * std::sin(p[0]);
        },
        grid, factor);
    CHECK(report.points == grid.size());
    CHECK(report.max_abs_deviation < 1e-12);
  }
  SUBCASE("one polarizer vs (1/4) sin^2 phi") {
    const auto report = convert::verify_rule_on_grid(
        [&](const convert::Params& p) {
          return experiments::eraser_poly(EraserConfig{p[0], p[1], std::nullopt, is, ii});
        },
        [](const convert::Params& p) {
          return 0.25 * std::sin(p[0]) * std::sin(p[0]);
        },
        grid, factor);
    CHECK(report.max_abs_deviation < 1e-12);
  }
  SUBCASE("two polarizers vs (1/4) sin^2 phi sin^2(theta1-theta2)") {
    const auto report = convert::verify_rule_on_grid(
        [&](const convert::Params& p) {
          return experiments::eraser_poly(EraserConfig{p[0], p[1], p[2], is, ii});
        },
        [](const convert::Params& p) {
          const double cross = std::sin(p[1] - p[2]);
          return 0.25 * std::sin(p[0]) * std::sin(p[0]) * cross * cross;
        },
        grid, factor);
    CHECK(report.max_abs_deviation < 1e-12);
  }
}
