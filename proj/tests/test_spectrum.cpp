#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oddchi/errors.hpp"
#include "oddchi/quadrature.hpp"
#include "oddchi/spectrum.hpp"

using namespace oddchi;

namespace {

constexpr double kPi = std::numbers::pi;

quad::QuadratureConfig tight() {
  quad::QuadratureConfig cfg;
  cfg.abs_tol = 1e-11;
  cfg.rel_tol = 1e-12;
  return cfg;
}

}  // namespace

TEST_CASE("Alpha and RadialFrequency invariants") {
  CHECK_THROWS_AS(Alpha(1.0), DomainError);
  CHECK_THROWS_AS(Alpha(0.9), DomainError);
  CHECK_THROWS_AS(Alpha(2.0000001), DomainError);
  CHECK_THROWS_AS(Alpha(std::nan("")), DomainError);
  CHECK(Alpha(2.0).value() == 2.0);
  CHECK_THROWS_AS(RadialFrequency(-0.1), DomainError);
  CHECK(RadialFrequency::from_planar(3.0, 4.0).value() == doctest::Approx(5.0));
}

TEST_CASE("closed form at r = 0 is the constant-integrand value") {
  const auto s = lambda_closed_form(RadialFrequency(0.0), Alpha(1.5), tight());
  CHECK(s.method == Method::ClosedForm);
  CHECK(std::abs(s.lambda - 6 * kPi) < 1e-12);
  CHECK(s.error_estimate >= 0.0);
  CHECK(s.converged);
}

TEST_CASE("closed form is positive below pi/2") {
  CHECK(lambda_closed_form(RadialFrequency(1.0), Alpha(1.5), tight()).lambda > 0.0);
  for (double a : {1.05, 1.2, 1.5, 2.0}) {
    for (double r = 0.0; r <= 0.5 * kPi; r += 0.05) {
      CHECK(lambda_closed_form(RadialFrequency(r), Alpha(a), tight()).lambda > 0.0);
    }
  }
}

TEST_CASE("Bessel series truncation") {
  // 4 pi 2^{-K} <= 1e-8 first holds at K = 31.
  CHECK(bessel_series_terms(Alpha(2.0), 1e-8) == 31);
  const auto s = lambda_bessel_series(RadialFrequency(0.0), Alpha(2.0), 1e-8);
  CHECK(s.work == 31);
  CHECK(s.error_estimate <= 1e-8);
  CHECK(s.error_estimate > 1e-8 / 2.0);
  // J0(0) = 1, so the truncation error is the tail bound itself.
  CHECK(std::abs(s.lambda - 4 * kPi) <= s.error_estimate * (1 + 1e-6) + 1e-14);
  for (double a : {1.05, 1.3, 1.9}) {
    const auto z = lambda_bessel_series(RadialFrequency(0.0), Alpha(a), 1e-13);
    CHECK(std::abs(z.lambda - lambda_at_zero(Alpha(a))) < 1e-12 * lambda_at_zero(Alpha(a)));
  }
  CHECK_THROWS_AS(lambda_bessel_series(RadialFrequency(1.0), Alpha(1.0001), 1e-8, 1000),
                  ResourceError);
  CHECK_THROWS_AS(lambda_bessel_series(RadialFrequency(1.0), Alpha(1.5), 0.0), DomainError);
}

TEST_CASE("complex form anchors and realness") {
  const auto z0 = lambda_complex_form(RadialFrequency(0.0), Alpha(1.5), tight());
  CHECK(std::abs(z0.real - 6 * kPi) < 1e-12);
  CHECK(std::abs(z0.imag) < 1e-14);
  const auto z = lambda_complex_form(RadialFrequency(5.0), Alpha(1.2), tight());
  CHECK(std::abs(z.imag) <= 1e-8);
  const auto c = lambda_closed_form(RadialFrequency(5.0), Alpha(1.2), tight());
  CHECK(std::abs(z.real - c.lambda) <= 1e-6);
}

TEST_CASE("three estimators agree at spot points") {
  struct Point { double r, a; };
  for (const auto [r, a] : {Point{4.0, 1.5}, Point{7.3, 1.05}, Point{3.1416, 1.01},
                            Point{12.5, 1.2}, Point{19.5, 2.0}}) {
    CAPTURE(r);
    CAPTURE(a);
    const auto c = lambda_closed_form(RadialFrequency(r), Alpha(a), tight());
    const auto b = lambda_bessel_series(RadialFrequency(r), Alpha(a), 1e-11);
    const auto z = lambda_complex_form(RadialFrequency(r), Alpha(a), tight());
    const double scale = 1.0 + std::abs(c.lambda);
    CHECK(std::abs(c.lambda - b.lambda) <= 1e-6 * scale);
    CHECK(std::abs(c.lambda - z.real) <= 1e-6 * scale);
    CHECK(std::abs(b.lambda - z.real) <= 1e-6 * scale);
  }
}

TEST_CASE("spike-aware and plain adaptive closed form agree") {
  quad::QuadratureConfig cfg = tight();
  cfg.max_subdivisions = 200000;
  for (double r : {3.1415, 6.0, 9.43, 15.0}) {
    const auto aware = lambda_closed_form(RadialFrequency(r), Alpha(1.01), cfg, true);
    const auto plain = lambda_closed_form(RadialFrequency(r), Alpha(1.01), cfg, false);
    CHECK(plain.converged);
    CHECK(std::abs(aware.lambda - plain.lambda) < 1e-7 * (1 + std::abs(aware.lambda)));
  }
}

TEST_CASE("spike breakpoints bracket every m pi crossing") {
  const double r = 10.0, a = 1.001;
  const auto cuts = spike_breakpoints(r, a, 0.5 * kPi);
  REQUIRE_FALSE(cuts.empty());
  CHECK(std::is_sorted(cuts.begin(), cuts.end()));
  CHECK(cuts.front() > 0.0);
  CHECK(cuts.back() < 0.5 * kPi);
  for (int m = 1; m * kPi <= r; ++m) {
    const double center = std::acos(m * kPi / r);
    bool found = false;
    for (double t : cuts) found = found || std::abs(t - center) < 1e-14;
    CHECK(found);
  }
  CHECK(spike_breakpoints(0.0, a, kPi).empty());
}

TEST_CASE("planar frequency reduces to its radius") {
  // Angular integral at planar frequency (3, 4) over [-pi, pi] with uniform
  // cuts, compared with the radial closed form at r = 5.
  const double a = 1.5;
  auto planar = [a](double theta) {
    const double x = 3.0 * std::cos(theta) + 4.0 * std::sin(theta);
    const double s = std::sin(x);
    return a * (a - 1.0) * std::cos(x) / ((a - 1.0) * (a - 1.0) + 4.0 * a * s * s);
  };
  std::vector<double> cuts;
  for (int i = 1; i < 2000; ++i) cuts.push_back(-kPi + 2 * kPi * i / 2000.0);
  const auto res = quad::integrate_adaptive(planar, -kPi, kPi, tight(), cuts);
  const auto radial = lambda_closed_form(RadialFrequency::from_planar(3.0, 4.0), Alpha(a), tight());
  CHECK(std::abs(res.value - radial.lambda) <= 1e-5);
}

TEST_CASE("c_alpha_eigenvalue") {
  for (double a : {1.1, 1.5, 2.0}) {
    CHECK(std::abs(c_alpha_eigenvalue(lambda_at_zero(Alpha(a)), Alpha(a)) - (1.0 - a)) < 1e-12);
    CHECK(c_alpha_eigenvalue(0.0, Alpha(a)) == 1.0);
    const auto s = lambda_closed_form(RadialFrequency(0.0), Alpha(a), tight());
    CHECK(std::abs(c_alpha_eigenvalue(s.lambda, Alpha(a)) - (1.0 - a)) <= 1e-10);
  }
  CHECK(c_alpha_eigenvalue(-10.0, Alpha(1.5)) == doctest::Approx(1.0 + 5.0 / (2 * kPi)));
  CHECK(c_alpha_eigenvalue(-10.0, Alpha(1.5)) == doctest::Approx(1.795775).epsilon(1e-6));
}
