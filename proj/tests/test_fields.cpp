#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "twophoton/fields.hpp"

using namespace twophoton;
using fields::DetectorField;
using fields::FieldExpr;
using fields::Source;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

DetectorField single(FieldExpr e) { return DetectorField(std::move(e)); }
}  // namespace

TEST_CASE("intensity of a single term is its squared amplitude for every delta") {
  FieldExpr e{fields::make_term(0.7, Source::Signal, 1.2, true)};
  for (double delta : {0.0, 0.3, 2.0, 5.9}) CHECK(e.intensity(delta) == doctest::Approx(0.49));
}

TEST_CASE("two equal terms interfere fully constructively at delta = 0") {
  FieldExpr e{fields::make_term(0.8, Source::Signal, 0.0, false),
              fields::make_term(0.8, Source::Idler, 0.0, true)};
  CHECK(e.intensity(0.0) == doctest::Approx(4.0 * 0.64).epsilon(1e-12));
}

TEST_CASE("hand-expanded beam splitter component: I(delta) = 1 + sin(delta)") {
  // |e^{i delta}/sqrt2 + i/sqrt2|^2 expands to 1 + sin(delta)
  FieldExpr e{fields::make_term(kInvSqrt2, Source::Signal, 0.0, true),
              fields::make_term(kInvSqrt2, Source::Idler, kPi / 2.0, false)};
  CHECK(e.intensity(kPi / 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(e.intensity(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.intensity(3.0 * kPi / 2.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("negative amplitudes fold into a pi phase jump") {
  const auto term = fields::make_term(-0.5, Source::Signal, 0.25, false);
  CHECK(term.amplitude == 0.5);
  CHECK(term.det_phase == doctest::Approx(0.25 + kPi));
  FieldExpr folded{term};
  FieldExpr raw{fields::make_term(0.5, Source::Signal, 0.25, false)};
  CHECK(folded.intensity(0.0) == doctest::Approx(raw.intensity(0.0)));
}

TEST_CASE("intensity stays non-negative on random expressions") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> amp(0.0, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::bernoulli_distribution coin;
  for (int i = 0; i < 200; ++i) {
    FieldExpr e;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < n; ++t)
      e.add(amp(rng), coin(rng) ? Source::Signal : Source::Idler, phase(rng), coin(rng));
    for (int d = 0; d < 8; ++d) CHECK(e.intensity(phase(rng)) >= 0.0);
  }
}

TEST_CASE("polarizer at 0 and pi/2 passes one component through") {
  FieldExpr h{fields::make_term(0.6, Source::Signal, 0.3, true)};
  FieldExpr v{fields::make_term(0.9, Source::Idler, 1.1, false)};
  const FieldExpr at0 = fields::apply_polarizer(h, v, 0.0);
  const FieldExpr at90 = fields::apply_polarizer(h, v, kPi / 2.0);
  for (double delta : {0.0, 1.0, 4.4}) {
    CHECK(at0.intensity(delta) == doctest::Approx(h.intensity(delta)).epsilon(1e-12));
    CHECK(at90.intensity(delta) == doctest::Approx(v.intensity(delta)).epsilon(1e-12));
  }
}

TEST_CASE("one-polarizer projection reproduces the displayed field") {
  // A_1 = (i/sqrt2) A_s cos(theta1 - phi) + (1/sqrt2) A_i cos(theta1) e^{i delta}
  // (angles chosen with positive projections; negative ones fold into a pi phase)
  const double phi = 0.7;
  const double theta1 = 0.4;
  fields::EraserFieldConfig config{phi, theta1, std::nullopt, 1.0, 1.0};
  const auto [d1, d2] = fields::build_eraser_fields(config);

  REQUIRE(d1.components.size() == 1);
  const auto& terms = d1.components[0].terms();
  REQUIRE(terms.size() == 2);
  // merged projection: signal term carries cos(theta1 - phi), idler cos(theta1)
  const auto& signal = terms[0].source == Source::Signal ? terms[0] : terms[1];
  const auto& idler = terms[0].source == Source::Signal ? terms[1] : terms[0];
  CHECK(signal.amplitude == doctest::Approx(kInvSqrt2 * std::cos(theta1 - phi)).epsilon(1e-12));
  CHECK(signal.det_phase == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(!signal.has_random_phase);
  CHECK(idler.amplitude == doctest::Approx(kInvSqrt2 * std::cos(theta1)).epsilon(1e-12));
  CHECK(idler.det_phase == doctest::Approx(0.0));
  CHECK(idler.has_random_phase);
}

TEST_CASE("beam splitter conserves energy in the no-polarizer case") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> amp(0.1, 2.0);
  for (int i = 0; i < 40; ++i) {
    const double a_s = amp(rng);
    const double a_i = amp(rng);
    fields::EraserFieldConfig config{angle(rng), std::nullopt, std::nullopt, a_s, a_i};
    const auto [d1, d2] = fields::build_eraser_fields(config);
    const double total = a_s * a_s + a_i * a_i;
    for (int d = 0; d < 12; ++d) {
      const double delta = angle(rng);
      CHECK(d1.intensity(delta) + d2.intensity(delta) ==
            doctest::Approx(total).epsilon(1e-12));
    }
  }
}

TEST_CASE("analytic delta-average matches the no-polarizer closed form") {
  // 1/4 (I_s^2 + I_i^2) + 1/2 I_s I_i sin^2(phi)
  for (double phi : {0.0, kPi / 4.0, kPi / 2.0, 2.4}) {
    fields::EraserFieldConfig config{phi, std::nullopt, std::nullopt, 1.0, 1.0};
    const auto [d1, d2] = fields::build_eraser_fields(config);
    const double got = fields::average_over_delta(d1, d2).value;
    CHECK(got == doctest::Approx(oracles::eraser_no_polarizers(phi, 1.0, 1.0)).epsilon(1e-12));
  }
  // the two spot values: 1/2 at phi = 0 and 1 at phi = pi/2
  {
    fields::EraserFieldConfig config{0.0, std::nullopt, std::nullopt, 1.0, 1.0};
    const auto [d1, d2] = fields::build_eraser_fields(config);
    CHECK(fields::average_over_delta(d1, d2).value == doctest::Approx(0.5).epsilon(1e-12));
  }
  {
    fields::EraserFieldConfig config{kPi / 2.0, std::nullopt, std::nullopt, 1.0, 1.0};
    const auto [d1, d2] = fields::build_eraser_fields(config);
    CHECK(fields::average_over_delta(d1, d2).value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("swapping the detectors leaves the averaged coincidence unchanged") {
  fields::EraserFieldConfig config{1.1, 0.4, 2.2, 1.3, 0.8};
  const auto [d1, d2] = fields::build_eraser_fields(config);
  CHECK(fields::average_over_delta(d1, d2).value ==
        doctest::Approx(fields::average_over_delta(d2, d1).value).epsilon(1e-14));
}

TEST_CASE("monte carlo average agrees with the analytic path") {
  fields::EraserFieldConfig config{kPi / 4.0, std::nullopt, std::nullopt, 1.0, 1.0};
  const auto [d1, d2] = fields::build_eraser_fields(config);
  const double analytic = fields::average_over_delta(d1, d2).value;
  const auto mc = fields::average_over_delta_monte_carlo(d1, d2, 1'000'000, 42);
  CHECK(mc.samples == 1'000'000);
  CHECK(mc.seed == 42);
  CHECK(std::abs(mc.value - analytic) <= 5.0 * mc.std_error);
  CHECK(std::abs(mc.value - analytic) <= 0.005 * analytic);  // 0.5% at 1e6 samples
}

TEST_CASE("monte carlo is reproducible and seed-sensitive") {
  fields::EraserFieldConfig config{0.9, 0.3, std::nullopt, 1.0, 1.0};
  const auto [d1, d2] = fields::build_eraser_fields(config);
  const auto a = fields::average_over_delta_monte_carlo(d1, d2, 5000, 7);
  const auto b = fields::average_over_delta_monte_carlo(d1, d2, 5000, 7);
  const auto c = fields::average_over_delta_monte_carlo(d1, d2, 5000, 8);
  CHECK(a.value == b.value);
  CHECK(a.value != c.value);
  CHECK_THROWS_AS(fields::average_over_delta_monte_carlo(d1, d2, 1, 7), ConfigError);
}

TEST_CASE("monte carlo tracks analytics on random detector pairs") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> amp(0.1, 1.5);
  std::bernoulli_distribution coin;
  for (int i = 0; i < 50; ++i) {
    const auto random_field = [&]() {
      FieldExpr e;
      const int n = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < n; ++t)
        e.add(amp(rng), coin(rng) ? Source::Signal : Source::Idler, angle(rng), coin(rng));
      return single(e);
    };
    const DetectorField d1 = random_field();
    const DetectorField d2 = random_field();
    const double analytic = fields::average_over_delta(d1, d2).value;
    const auto mc = fields::average_over_delta_monte_carlo(d1, d2, 20000, 1000 + i);
    // the 1e-9 slack covers delta-independent products, where the sample
    // variance is zero and only summation rounding separates the two paths
    CHECK(std::abs(mc.value - analytic) <= 5.0 * mc.std_error + 1e-9 * (1.0 + analytic));
  }
}

TEST_CASE("eraser field construction validates its angles") {
  CHECK_THROWS_AS(fields::build_eraser_fields({0.0, std::nullopt, 0.5, 1.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(fields::build_eraser_fields({7.0, std::nullopt, std::nullopt, 1.0, 1.0}),
                  ConfigError);
  CHECK_THROWS_AS(fields::build_eraser_fields({-0.1, std::nullopt, std::nullopt, 1.0, 1.0}),
                  ConfigError);
  CHECK_THROWS_AS(fields::build_eraser_fields({0.0, 6.5, std::nullopt, 1.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(fields::build_eraser_fields({0.0, std::nullopt, std::nullopt, -1.0, 1.0}),
                  ConfigError);
}

TEST_CASE("coincidence poly splits the average by source monomials") {
  using convert::Source::A;
  using convert::Source::B;
  const double phi = 1.3;
  const double is = 1.44;
  const double ii = 0.81;
  fields::EraserFieldConfig config{phi, std::nullopt, std::nullopt, std::sqrt(is), std::sqrt(ii)};
  const auto [d1, d2] = fields::build_eraser_fields(config);
  const auto poly = fields::coincidence_poly(d1, d2);

  const double s = std::sin(phi);
  CHECK(poly.coefficient(convert::SourceMultiset::pair(A, A)) ==
        doctest::Approx(0.25 * is * is).epsilon(1e-12));
  CHECK(poly.coefficient(convert::SourceMultiset::pair(B, B)) ==
        doctest::Approx(0.25 * ii * ii).epsilon(1e-12));
  CHECK(poly.coefficient(convert::SourceMultiset::pair(A, B)) ==
        doctest::Approx(0.5 * is * ii * s * s).epsilon(1e-12));
  // the poly total is the plain delta-average
  CHECK(poly.total() == doctest::Approx(fields::average_over_delta(d1, d2).value).epsilon(1e-13));
}

TEST_CASE("coincidence poly rejects tagging that mixes the sources") {
  FieldExpr bad{fields::make_term(1.0, Source::Signal, 0.0, true),
                fields::make_term(1.0, Source::Idler, 0.0, true)};
  FieldExpr other{fields::make_term(1.0, Source::Idler, 0.0, false)};
  CHECK_THROWS_AS(fields::coincidence_poly(single(bad), single(other)), ConfigError);

  // both sources unflagged is just as inseparable
  FieldExpr mixed{fields::make_term(1.0, Source::Signal, 0.0, false),
                  fields::make_term(1.0, Source::Idler, 0.3, false)};
  CHECK_THROWS_AS(fields::coincidence_poly(single(mixed), single(mixed)), ConfigError);
}
