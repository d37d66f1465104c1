#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "oracles.hpp"
#include "singlap/errors.hpp"
#include "singlap/quadrature.hpp"
#include "singlap/rng.hpp"
#include "singlap/truncation.hpp"

using namespace singlap;

TEST_CASE("gaussian bell over the plane gives pi") {
  QuadratureSpec spec;
  spec.n_theta = 64;
  spec.n_r = 200;
  const auto result = integrate_polar(
      [](double r, double) { return std::exp(-r * r) * r; }, 0.0, 6.0, spec);
  CHECK(std::abs(result.value - std::numbers::pi) < 1e-12);
  CHECK(result.err_est < 1e-12);
}

TEST_CASE("angular moment with trivial radial part") {
  QuadratureSpec spec;
  spec.n_theta = 256;
  spec.n_r = 16;
  const auto result = integrate_polar(
      [](double, double theta) { return std::cos(theta) / (1.0 + 0.4 * std::cos(theta)); }, 0.0,
      1.0, spec);
  CHECK(result.value == doctest::Approx(oracles::kAngularMomentX).epsilon(1e-11));
  CHECK(std::abs(result.value - (-1.4308)) < 5e-4);
}

TEST_CASE("cos-weighted ring integral vs adaptive oracle") {
  const double oracle = oracles::adaptive_simpson(
      [](double th) { return std::cos(th) * std::exp(2.0 * std::cos(th)); }, 0.0,
      2.0 * std::numbers::pi, 1e-13);
  const double ours = integrate_periodic(
      [](double th) { return std::cos(th) * std::exp(2.0 * std::cos(th)); }, 512);
  CHECK(ours == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(ours == doctest::Approx(oracles::kCosWeightedRingIntegral).epsilon(1e-12));
}

TEST_CASE("integrate_polar is linear in the integrand") {
  QuadratureSpec spec;
  spec.n_theta = 64;
  spec.n_r = 64;
  const CounterRng rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const double a = 2.0 * rng.uniform(4 * trial) - 1.0;
    const double b = 2.0 * rng.uniform(4 * trial + 1) - 1.0;
    const double w1 = 1.0 + rng.uniform(4 * trial + 2);
    const double w2 = 1.0 + rng.uniform(4 * trial + 3);
    auto f = [w1](double r, double th) { return std::exp(-w1 * r * r) * std::cos(th) + r; };
    auto g = [w2](double r, double th) { return std::sin(w2 * th) + r * r; };
    const double lhs =
        integrate_polar([&](double r, double th) { return a * f(r, th) + b * g(r, th); }, 0.0,
                        2.0, spec)
            .value;
    const double rhs = a * integrate_polar(f, 0.0, 2.0, spec).value +
                       b * integrate_polar(g, 0.0, 2.0, spec).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("doubling the rule changes the value by less than err_est") {
  // table-1-grade integrand
  const double t = 5e-3;
  auto integrand = [t](double r, double theta) {
    const double a = 1.0 + 0.4 * std::cos(theta);
    return std::exp(-a * a * r * r / t) * (1.2 * r * std::cos(theta)) * a * a * r;
  };
  QuadratureSpec spec;  // defaults
  const auto base = integrate_polar(integrand, 0.0, 1.0, spec);
  QuadratureSpec doubled;
  doubled.n_theta = 2 * spec.n_theta;
  doubled.n_r = 2 * spec.n_r;
  const auto refined = integrate_polar(integrand, 0.0, 1.0, doubled);
  CHECK(std::abs(refined.value - base.value) <= base.err_est + 1e-15);
}

TEST_CASE("non-finite integrand sample reports the offending node") {
  QuadratureSpec spec;
  spec.n_theta = 16;
  spec.n_r = 8;
  try {
    integrate_polar([](double r, double) { return 1.0 / (r - r); }, 0.0, 1.0, spec);
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("theta=") != std::string::npos);
  }
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec spec;
  spec.n_theta = 15;
  CHECK_THROWS_AS(spec.validate(), ArgumentError);
  spec.n_theta = 18;
  spec.n_r = 4;
  CHECK_THROWS_AS(spec.validate(), ArgumentError);
  CHECK_THROWS_AS(
      integrate_polar([](double, double) { return 1.0; }, -1.0, 1.0, QuadratureSpec{}),
      ArgumentError);
}

TEST_CASE("integrate_tensor handles negative first coordinates") {
  // log-radius style domain: int_{-2}^{0} e^{2x} dx times 2pi
  QuadratureSpec spec;
  spec.n_theta = 16;
  spec.n_r = 32;
  const auto result =
      integrate_tensor([](double x, double) { return std::exp(2.0 * x); }, -2.0, 0.0, spec);
  const double exact = 2.0 * std::numbers::pi * 0.5 * (1.0 - std::exp(-4.0));
  CHECK(result.value == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("pairwise sum matches plain summation") {
  std::vector<double> terms;
  const CounterRng rng(7);
  double plain = 0.0;
  for (int i = 0; i < 1000; ++i) {
    terms.push_back(rng.uniform(i) - 0.5);
    plain += terms.back();
  }
  CHECK(pairwise_sum(terms) == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("truncation radius per policy") {
  CHECK(truncation_radius(0.01, TruncationPolicy::multiple(10.0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(truncation_radius(1e-4, TruncationPolicy::power(0.49)) ==
        doctest::Approx(std::pow(1e-4, 0.49)).epsilon(1e-15));
  CHECK(truncation_radius(1e-4, TruncationPolicy::power(0.49)) ==
        doctest::Approx(0.0109648).epsilon(1e-5));
  CHECK(truncation_radius(1.0, TruncationPolicy::fixed(1.0)) == 1.0);
  CHECK_THROWS_AS(truncation_radius(0.0, TruncationPolicy::fixed(1.0)), ArgumentError);
}

TEST_CASE("power truncation radius exceeds the kernel width for t < 1") {
  for (double eta : {0.26, 0.3, 0.4, 0.49}) {
    for (double t : {0.9, 0.1, 1e-3, 1e-6, 1e-9}) {
      CHECK(truncation_radius(t, TruncationPolicy::power(eta)) > std::sqrt(t));
    }
  }
}

TEST_CASE("truncation policy parsing") {
  CHECK(TruncationPolicy::parse("fixed:1").mode == TruncationPolicy::Mode::kFixedRadius);
  CHECK(TruncationPolicy::parse("power:0.49").param == doctest::Approx(0.49));
  CHECK(TruncationPolicy::parse("mult:10").param == doctest::Approx(10.0));
  CHECK_THROWS_AS(TruncationPolicy::parse("power"), ArgumentError);
  CHECK_THROWS_AS(TruncationPolicy::parse("power:0.6"), ArgumentError);
  CHECK_THROWS_AS(TruncationPolicy::parse("banana:1"), ArgumentError);
  CHECK_THROWS_AS(TruncationPolicy::parse("mult:abc"), ArgumentError);
}

TEST_CASE("truncation tail bound arithmetic") {
  // t=0.01, eta=0.4, d=2, mass 10: 10 * 1e4 * exp(-0.01^{-0.2}) ~ 8.1e3
  const double b1 = truncation_tail_bound(1.0, 5.0, 5.0, 0.01, 0.4, 2);
  CHECK(b1 == doctest::Approx(10.0 * 1e4 * std::exp(-std::pow(0.01, -0.2))).epsilon(1e-14));
  CHECK(b1 == doctest::Approx(8.1e3).epsilon(0.02));

  // t=1e-4 case: the bound is still large at moderate t ...
  const double b2 = truncation_tail_bound(0.0, 1.0, 10.0, 1e-4, 0.4, 2);
  CHECK(b2 == doctest::Approx(1.8e6).epsilon(0.05));
  // ... but the exponential wins over any power as t -> 0
  double prev = truncation_tail_bound(0.0, 1.0, 10.0, 1e-6, 0.4, 2);
  for (double t : {1e-8, 1e-10, 1e-12}) {
    const double b = truncation_tail_bound(0.0, 1.0, 10.0, t, 0.4, 2);
    CHECK(b < prev);
    prev = b;
  }
  CHECK(prev < 1e-20);

  // eta -> 1/2 limit: mass * t^{-d/2-1} e^{-1}
  const double near_half = truncation_tail_bound(0.0, 1.0, 10.0, 0.01, 0.4999999, 2);
  CHECK(near_half == doctest::Approx(10.0 * 1e4 * std::exp(-1.0)).epsilon(1e-4));

  CHECK_THROWS_AS(truncation_tail_bound(1.0, 1.0, 1.0, 0.01, 0.5, 2), ArgumentError);
  CHECK_THROWS_AS(truncation_tail_bound(1.0, 1.0, 1.0, 1.5, 0.4, 2), ArgumentError);
}
