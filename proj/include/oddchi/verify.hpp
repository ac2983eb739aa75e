#pragma once

#include <cstdint>
#include <optional>

#include "oddchi/quadrature.hpp"
#include "oddchi/spectrum.hpp"

namespace oddchi::verify {

/// Quadratic form of B_alpha on the indicator of a disk of radius R, computed on
/// the Fourier side and normalized by ||f||^2 lambda(0):
///   (2 / lambda(0)) * int_0^cutoff lambda(rho) J1(R rho)^2 / rho d rho.
/// lambda comes from the Bessel series. A disk with R < 1/2 has no odd
/// distances inside it, so the exact value is 0 there.
struct DiskFormResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};
DiskFormResult independent_disk_form(double R, Alpha alpha, double cutoff,
                                     const quad::QuadratureConfig& cfg);

struct DiskConfig {
  std::int64_t k = 1;  // disk radius 2k + 1
  Alpha alpha{1.5};
};

// Lower bound for <f, D_alpha f> / ||f||^2 on a disk of radius 2k+1, summed
// term by term with decay factors alpha^{-(k-j)} (alpha > 1):
//   sum_{j<k} (1 - alpha^{-(k-j)}) ((2j+2)^2 - (2j)^2) / (2k+1)^2.
double disk_rayleigh_direct_sum(const DiskConfig& cfg);

// The same sum with every decay factor dropped: (2k)^2 / (2k+1)^2.
double disk_rayleigh_no_decay_limit(std::int64_t k);

// The sum written with growth factors alpha^{k+1-j} (terms are positive
// only for alpha < 1). Any alpha != 1.
double disk_rayleigh_printed_sum(std::int64_t k, double alpha);

// The printed closed form, normalized by (2k+1)^2:
//   ((2k)^2 - 8 (a^{k+2} - (k+1) a^2 + k a) / (a-1)^2 + 4 (a^{k+1} - a) / (a-1)) / (2k+1)^2.
// It equals the sum with factors alpha^{k-j}, not the printed alpha^{k+1-j}.
double disk_rayleigh_printed_closed_form(std::int64_t k, double alpha);
double disk_rayleigh_printed_closed_form(const DiskConfig& cfg);

struct CosineGap {
  double gap = 0.0;    // cos(theta) - cos(theta + d)
  double bound = 0.0;  // 1 - cos(d)
  bool holds = false;
};
/// Throws DomainError unless d > 0, theta >= 0 and theta + d <= pi/2.
CosineGap cosine_gap(double theta, double d);

struct CosineGapSampling {
  std::int64_t samples = 0;
  std::int64_t failures = 0;
  double worst_margin = 0.0;  // min(gap - bound)
};
/// Uniform (d, theta) in the admissible triangle from a seeded mt19937_64.
CosineGapSampling sample_cosine_gap(std::int64_t samples, std::uint64_t seed);

struct HIntegrand {
  Alpha alpha{1.5};
  double r = 1.0;
  // h(theta) = (alpha-1) cos(r cos theta) / ((alpha-1)^2 + 4 alpha sin^2(r cos theta)).
  double operator()(double theta) const;
  // (alpha-1) / ((alpha-1)^2 + 4 alpha sin^2(r cos theta)): the magnitude envelope.
  double envelope(double theta) const;
};

struct RegionMeasureResult {
  double measured = 0.0;  // sampled measure of the component around the outer spike
  double bound = 0.0;     // 4 (alpha-1)^{1/4} / sqrt(r)
  bool holds = false;
  std::int64_t spike_index = 0;  // floor(r / pi)
};
/// Samples the envelope on `samples` midpoints of [0, pi/2] and measures the
/// connected run where envelope >= 1 that contains arccos(floor(r/pi) pi / r).
/// Throws DomainError if r <= pi/2 or samples < 1e5; floor(r/pi) = 0 is
/// reported the same way.
RegionMeasureResult region_measure_check(const HIntegrand& h, std::int64_t samples);

}  // namespace oddchi::verify
