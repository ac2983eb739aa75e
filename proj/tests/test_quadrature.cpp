#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oddchi/bessel.hpp"
#include "oddchi/errors.hpp"
#include "oddchi/quadrature.hpp"

using oddchi::quad::integrate_adaptive;
using oddchi::quad::QuadratureConfig;
using oddchi::special::bessel_j0;
using oddchi::special::bessel_j1;

namespace {

constexpr double kPi = std::numbers::pi;

// Plain ascending series in long double, independent of the library's
// branch selection. Only trusted for |x| <= 8.
long double series_oracle(long double x, int order) {
  long double term = order == 0 ? 1.0L : x / 2;
  long double sum = term;
  for (int m = 1; m < 120; ++m) {
    term *= -(x * x / 4) / (static_cast<long double>(m) * (m + order));
    sum += term;
  }
  return sum;
}

long double bisect_root(int order, long double lo, long double hi) {
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if ((series_oracle(lo, order) > 0) == (series_oracle(mid, order) > 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

}  // namespace

TEST_CASE("integrate_adaptive reproduces elementary integrals") {
  const QuadratureConfig cfg;
  auto r1 = integrate_adaptive([](double x) { return x; }, 0.0, 1.0, cfg);
  CHECK(r1.converged);
  CHECK(r1.value == doctest::Approx(0.5).epsilon(1e-14));

  auto r2 = integrate_adaptive([](double x) { return std::cos(x); }, 0.0, kPi, cfg);
  CHECK(std::abs(r2.value) < 1e-12);

  auto r3 = integrate_adaptive([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0,
                               cfg);
  CHECK(std::abs(r3.value - kPi) < 1e-12);
  CHECK(r3.error_estimate >= 0.0);
  CHECK(r3.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r3.value)));
}

TEST_CASE("negation and interval splitting") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-9;
  cfg.rel_tol = 1e-12;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = coef(rng), b = coef(rng), w = 1.0 + std::abs(coef(rng)) * 5;
    auto f = [=](double x) { return a * std::sin(w * x) + b / (1.2 + std::cos(x)); };
    auto g = [=](double x) { return -f(x); };
    const double lo = -1.0, mid = 0.3 + 0.1 * trial, hi = 4.5;
    const auto whole = integrate_adaptive(f, lo, hi, cfg);
    const auto neg = integrate_adaptive(g, lo, hi, cfg);
    CHECK(std::abs(whole.value + neg.value) <= 2 * cfg.abs_tol);
    const auto left = integrate_adaptive(f, lo, mid, cfg);
    const auto right = integrate_adaptive(f, mid, hi, cfg);
    CHECK(std::abs(whole.value - left.value - right.value) <= 3 * cfg.abs_tol);
  }
}

TEST_CASE("breakpoints pre-split a narrow spike") {
  const double width = 1e-6;
  auto spike = [&](double x) { return width / (width * width + (x - 0.3) * (x - 0.3)); };
  const double exact = std::atan((1.0 - 0.3) / width) + std::atan(0.3 / width);
  QuadratureConfig cfg;
  const std::vector<double> cuts{0.3, 0.3 - 1e-5, 0.3 + 1e-5, 0.3 - 1e-3, 0.3 + 1e-3};
  const auto split = integrate_adaptive(spike, 0.0, 1.0, cfg, cuts);
  CHECK(split.converged);
  CHECK(std::abs(split.value - exact) < 1e-9);
  // Breakpoints outside (lo, hi) are ignored.
  const std::vector<double> outside{-1.0, 2.0};
  const auto plain = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, cfg, outside);
  CHECK(plain.panels_used == 1);
}

TEST_CASE("exhausted budget reports converged=false instead of throwing") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 3;
  cfg.abs_tol = 1e-14;
  cfg.rel_tol = 1e-14;
  const auto r = integrate_adaptive([](double x) { return std::sin(200.0 * x); }, 0.0, 10.0, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.panels_used <= 3);
  CHECK(std::isfinite(r.value));
}

TEST_CASE("integrate_adaptive domain errors") {
  const QuadratureConfig cfg;
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 1.0, 1.0, cfg),
                  oddchi::DomainError);
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 2.0, 1.0, cfg),
                  oddchi::DomainError);
  try {
    integrate_adaptive([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, cfg);
    FAIL("expected DomainError");
  } catch (const oddchi::DomainError& e) {
    CHECK(std::string(e.what()).find("x = 0.5") != std::string::npos);
  }
  QuadratureConfig bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), oddchi::DomainError);
}

TEST_CASE("bessel anchors") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(bessel_j1(0.0) == 0.0);
  CHECK(std::abs(bessel_j0(1.0) - 0.7651976865579666) < 1e-15);
  CHECK(std::abs(bessel_j1(1.0) - 0.4400505857449335) < 1e-15);
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);
  CHECK(std::abs(bessel_j1(3.831705970207512)) < 1e-10);
  // Roots located by bisection on the independent series oracle.
  CHECK(std::abs(static_cast<double>(bisect_root(0, 2.0L, 3.0L)) - 2.404825557695773) < 1e-12);
  CHECK(std::abs(static_cast<double>(bisect_root(1, 3.5L, 4.0L)) - 3.831705970207512) < 1e-12);
  CHECK_THROWS_AS(bessel_j0(std::nan("")), oddchi::DomainError);
  CHECK_THROWS_AS(bessel_j1(INFINITY), oddchi::DomainError);
}

TEST_CASE("bessel agrees with 40-digit reference values across both branches") {
  // x, J0(x), J1(x) computed with mpmath at 40 digits.
  struct Ref { double x, j0, j1; };
  const Ref refs[] = {
      {0.5, 0.93846980724081290423, 0.24226845767487388638},
      {1, 0.76519768655796655145, 0.44005058574493351596},
      {2.5, -0.048383776468197996327, 0.49709410246427403801},
      {7.25, 0.29199692419177899751, 0.068581700653131744531},
      {11.9, 0.025049441699589563728, -0.22898324966192407078},
      {12.1, 0.069666773606807388498, -0.21574897337692477718},
      {16.99, -0.1708227138611533194, -0.096022079257929284077},
      {17.01, -0.16886937966714381897, -0.099304207952097674626},
      {25, 0.096266783275958116174, -0.12535024958028990465},
      {100.75, 0.067025670756903285869, -0.042402995631577767147},
      {945.031, -0.0050769527723642080809, 0.025450688025009297559},
      {3333.3, -0.010433079003477949898, 0.0090614755606423937808},
      {9999.9, -0.0066965696992755818975, 0.0043377025231367821578},
  };
  for (const auto& ref : refs) {
    CAPTURE(ref.x);
    CHECK(std::abs(bessel_j0(ref.x) - ref.j0) < 1e-12);
    CHECK(std::abs(bessel_j1(ref.x) - ref.j1) < 1e-12);
    CHECK(bessel_j0(-ref.x) == bessel_j0(ref.x));
    CHECK(bessel_j1(-ref.x) == -bessel_j1(ref.x));
  }
  for (double x = 0.0; x <= 8.0; x += 0.125) {
    CHECK(std::abs(bessel_j0(x) - static_cast<double>(series_oracle(x, 0))) < 1e-14);
    CHECK(std::abs(bessel_j1(x) - static_cast<double>(series_oracle(x, 1))) < 1e-14);
  }
}

TEST_CASE("bessel_j0 satisfies its differential equation") {
  const double h = 1e-3;
  for (double x : {1.0, 5.0, 10.0}) {
    const double d1 = (bessel_j0(x + h) - bessel_j0(x - h)) / (2 * h);
    const double d2 = (bessel_j0(x + h) - 2 * bessel_j0(x) + bessel_j0(x - h)) / (h * h);
    CHECK(std::abs(bessel_j0(x) + d2 + d1 / x) <= 1e-6);
    // J0' = -J1
    CHECK(std::abs(d1 + bessel_j1(x)) < 1e-6);
  }
}
