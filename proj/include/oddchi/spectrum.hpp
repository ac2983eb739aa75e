#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "oddchi/quadrature.hpp"

namespace oddchi {

/// Weight-decay parameter of the odd-circle averaging operator. The circle
/// of radius 2k+1 carries weight alpha^{-k}, so the weights are summable
/// only for alpha > 1; the admissible range is 1 < alpha <= 2.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// Radial Fourier frequency. The symbol is rotation invariant, so a planar
/// frequency (r, s) is represented by its length sqrt(r^2 + s^2).
class RadialFrequency {
 public:
  explicit RadialFrequency(double r);
  static RadialFrequency from_planar(double r, double s);
  double value() const { return r_; }

 private:
  double r_;
};

enum class Method { ClosedForm, BesselSeries, ComplexForm };

std::string_view method_name(Method m);

struct EigenvalueSample {
  double r = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  Method method = Method::ClosedForm;
  double error_estimate = 0.0;
  bool converged = true;
  // Quadrature panels, or series terms for BesselSeries.
  std::int64_t work = 0;
};

struct ComplexIntegral {
  double real = 0.0;
  double imag = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

inline constexpr std::int64_t kDefaultSeriesTermCap = 10'000'000;

/// lambda(0; alpha) = 2 pi alpha / (alpha - 1).
double lambda_at_zero(Alpha alpha);

/// Angles in (0, upper) where the real-form integrand peaks or changes
/// scale: r cos(theta) = m pi, plus offsets graded geometrically (ratio 4)
/// away from each peak, starting at the Lorentzian half-width
/// (alpha - 1) / (2 sqrt(alpha)) in the variable x = r cos(theta).
/// `upper` is pi/2 or pi.
std::vector<double> spike_breakpoints(double r, double alpha, double upper);

/// The real form of the symbol,
///   4 * int_0^{pi/2} alpha (alpha-1) cos(x) / ((alpha-1)^2 + 4 alpha sin^2 x) dtheta,
/// x = r cos(theta), using the theta -> -theta and theta -> pi - theta
/// symmetries of the full [-pi, pi] integral.
EigenvalueSample lambda_closed_form(RadialFrequency r, Alpha alpha,
                                    const quad::QuadratureConfig& cfg,
                                    bool spike_aware = true);

/// 2 pi * sum_k alpha^{-k} J0((2k+1) r), truncated at the first K whose
/// geometric tail bound 2 pi alpha^{-K} / (1 - 1/alpha) is <= tol.
/// Throws ResourceError if K would exceed term_cap.
EigenvalueSample lambda_bessel_series(RadialFrequency r, Alpha alpha, double tol,
                                      std::int64_t term_cap = kDefaultSeriesTermCap);

/// Number of series terms lambda_bessel_series uses for (alpha, tol).
std::int64_t bessel_series_terms(Alpha alpha, double tol);

/// int_{-pi}^{pi} e^{i x} / (1 - e^{2 i x} / alpha) dtheta with x = r cos(theta),
/// integrated without the real-part simplification.
ComplexIntegral lambda_complex_form(RadialFrequency r, Alpha alpha,
                                    const quad::QuadratureConfig& cfg);

/// Eigenvalue of C_alpha = I - ((alpha-1)/2pi) B_alpha for a B_alpha eigenvalue.
double c_alpha_eigenvalue(double lambda, Alpha alpha);

/// Estimator used by the scans: the real form with spike-aware panels.
EigenvalueSample lambda_reference(RadialFrequency r, Alpha alpha,
                                  const quad::QuadratureConfig& cfg,
                                  bool spike_aware = true);

}  // namespace oddchi
