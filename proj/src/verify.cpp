#include "oddchi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oddchi/bessel.hpp"
#include "oddchi/errors.hpp"

namespace oddchi::verify {

namespace {
constexpr double kPi = std::numbers::pi;

void require_k(std::int64_t k) {
  if (k < 1) throw DomainError("disk Rayleigh sums need k >= 1");
}
}  // namespace

DiskFormResult independent_disk_form(double R, Alpha alpha, double cutoff,
                                     const quad::QuadratureConfig& cfg) {
  if (!std::isfinite(R) || R < 0.0) throw DomainError("disk radius must be >= 0");
  if (R == 0.0) return {};
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw DomainError("cutoff must be positive");
  const double series_tol = 1e-12;
  auto integrand = [&](double rho) {
    if (rho == 0.0) return 0.0;
    const double j1 = special::bessel_j1(R * rho);
    const double lam = lambda_bessel_series(RadialFrequency(rho), alpha, series_tol).lambda;
    return lam * j1 * j1 / rho;
  };
  // Unit panels keep each one to a few oscillations.
  std::vector<double> cuts;
  for (double x = 1.0; x < cutoff; x += 1.0) cuts.push_back(x);
  const auto res = quad::integrate_adaptive(integrand, 0.0, cutoff, cfg, cuts);
  const double scale = 2.0 / lambda_at_zero(alpha);
  return {scale * res.value, scale * res.error_estimate, res.converged};
}

double disk_rayleigh_direct_sum(const DiskConfig& cfg) {
  require_k(cfg.k);
  const double a = cfg.alpha.value();
  double sum = 0.0;
  for (std::int64_t j = 0; j < cfg.k; ++j) {
    const double annulus = 8.0 * static_cast<double>(j) + 4.0;  // (2j+2)^2 - (2j)^2
    sum += (1.0 - std::pow(a, -static_cast<double>(cfg.k - j))) * annulus;
  }
  const double radius = 2.0 * static_cast<double>(cfg.k) + 1.0;
  return sum / (radius * radius);
}

double disk_rayleigh_no_decay_limit(std::int64_t k) {
  require_k(k);
  const double two_k = 2.0 * static_cast<double>(k);
  return two_k * two_k / ((two_k + 1.0) * (two_k + 1.0));
}

double disk_rayleigh_printed_sum(std::int64_t k, double alpha) {
  require_k(k);
  double sum = 0.0;
  for (std::int64_t j = 0; j < k; ++j) {
    sum += (1.0 - std::pow(alpha, static_cast<double>(k + 1 - j))) * (8.0 * static_cast<double>(j) + 4.0);
  }
  const double radius = 2.0 * static_cast<double>(k) + 1.0;
  return sum / (radius * radius);
}

double disk_rayleigh_printed_closed_form(std::int64_t k, double a) {
  require_k(k);
  if (a == 1.0 || !std::isfinite(a)) throw DomainError("closed form needs finite alpha != 1");
  const auto kd = static_cast<double>(k);
  const double am1 = a - 1.0;
  const double numer = 4.0 * kd * kd -
                       8.0 * (std::pow(a, kd + 2.0) - (kd + 1.0) * a * a + kd * a) / (am1 * am1) +
                       4.0 * (std::pow(a, kd + 1.0) - a) / am1;
  const double radius = 2.0 * kd + 1.0;
  return numer / (radius * radius);
}

double disk_rayleigh_printed_closed_form(const DiskConfig& cfg) {
  return disk_rayleigh_printed_closed_form(cfg.k, cfg.alpha.value());
}

CosineGap cosine_gap(double theta, double d) {
  if (!(d > 0.0) || !(theta >= 0.0) || !(theta + d <= 0.5 * kPi + 1e-15)) {
    throw DomainError("cosine_gap needs d > 0, theta >= 0, theta + d <= pi/2");
  }
  CosineGap out;
  out.gap = std::cos(theta) - std::cos(theta + d);
  out.bound = 1.0 - std::cos(d);
  out.holds = out.gap >= out.bound - 1e-12;
  return out;
}

CosineGapSampling sample_cosine_gap(std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CosineGapSampling out;
  out.samples = samples;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < samples; ++i) {
    // d in (0, pi/2], theta in [0, pi/2 - d].
    const double d = 0.5 * kPi * (1.0 - unit(rng));
    const double theta = (0.5 * kPi - d) * unit(rng);
    const auto g = cosine_gap(theta, d);
    if (!g.holds) ++out.failures;
    out.worst_margin = std::min(out.worst_margin, g.gap - g.bound);
  }
  return out;
}

double HIntegrand::operator()(double theta) const {
  const double x = r * std::cos(theta);
  return std::cos(x) * envelope(theta);
}

double HIntegrand::envelope(double theta) const {
  const double a = alpha.value();
  const double s = std::sin(r * std::cos(theta));
  return (a - 1.0) / ((a - 1.0) * (a - 1.0) + 4.0 * a * s * s);
}

RegionMeasureResult region_measure_check(const HIntegrand& h, std::int64_t samples) {
  if (!(h.r > 0.5 * kPi)) throw DomainError("region_measure_check needs r > pi/2");
  if (samples < 100000) throw DomainError("region_measure_check needs >= 1e5 samples");
  RegionMeasureResult out;
  out.spike_index = static_cast<std::int64_t>(std::floor(h.r / kPi));
  if (out.spike_index == 0) {
    throw DomainError("region_measure_check undefined: floor(r/pi) = 0");
  }
  out.bound = 4.0 * std::pow(h.alpha.value() - 1.0, 0.25) / std::sqrt(h.r);

  const double width = 0.5 * kPi / static_cast<double>(samples);
  auto at = [&](std::int64_t i) { return (static_cast<double>(i) + 0.5) * width; };
  auto inside = [&](std::int64_t i) { return h.envelope(at(i)) >= 1.0; };
  const double center = std::acos(std::min(1.0, static_cast<double>(out.spike_index) * kPi / h.r));
  auto seed = std::clamp(static_cast<std::int64_t>(std::floor(center / width)), std::int64_t{0},
                         samples - 1);
  // Start from whichever adjacent sample is closest to the spike center.
  if (seed + 1 < samples && std::abs(at(seed + 1) - center) < std::abs(at(seed) - center)) ++seed;
  std::int64_t count = 0;
  if (inside(seed)) {
    count = 1;
    for (std::int64_t i = seed - 1; i >= 0 && inside(i); --i) ++count;
    for (std::int64_t i = seed + 1; i < samples && inside(i); ++i) ++count;
  }
  out.measured = static_cast<double>(count) * width;
  out.holds = out.measured <= out.bound * (1.0 + 1e-3);
  return out;
}

}  // namespace oddchi::verify
