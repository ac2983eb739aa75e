#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddchi/quadrature.hpp"
#include "oddchi/spectrum.hpp"

namespace oddchi {

struct ScanConfig {
  double r_min = 0.5 * std::numbers::pi;
  double r_max = 60.0;
  // Unset: min(0.05, 5 (alpha - 1)).
  std::optional<double> coarse_step;
  double refine_tol = 1e-6;
  bool spike_aware = true;
  quad::QuadratureConfig quad{1e-9, 1e-9, 20000, 1e-15};

  double step_for(Alpha alpha) const;
  void validate() const;
};

struct LambdaMin {
  double r_star = 0.0;
  double lambda_min = 0.0;
  // Largest lambda seen on the coarse grid (for the rho maximum).
  double lambda_max_scanned = 0.0;
  std::size_t evaluations = 0;
};

/// Coarse scan of lambda(r; alpha) on [r_min, r_max] followed by
/// golden-section refinement around the smallest grid value. If the refined
/// point is worse than the grid minimum the grid minimum is returned.
/// Throws ScanError when no negative lambda is found on the grid.
LambdaMin find_lambda_min(Alpha alpha, const ScanConfig& cfg);

struct SpectralSummary {
  double alpha = 0.0;
  double lambda_min = 0.0;
  double r_at_min = 0.0;
  double rho = 0.0;
  double chi_lower_bound = 0.0;
};

/// rho = max |1 - ((alpha-1)/2pi) lambda| over {lambda_min, lambda_max} and
/// the r = 0 branch (which contributes alpha - 1); chi >= rho / (rho - 1).
/// Throws ScanError when rho <= 1 (no bound).
SpectralSummary summarize_bound(Alpha alpha, double lambda_min, double r_at_min,
                                std::optional<double> lambda_max = std::nullopt);

SpectralSummary chi_lower_bound(Alpha alpha, const ScanConfig& cfg);

struct SweepEntry {
  double alpha = 0.0;
  std::optional<SpectralSummary> summary;
  std::string status = "ok";
};

/// One entry per input alpha, in input order. Failures (invalid alpha, scan
/// failure) are recorded in `status` without aborting the sweep. `jobs`
/// threads work on independent alpha points.
std::vector<SweepEntry> sweep_alpha(std::span<const double> alphas, const ScanConfig& cfg,
                                    int jobs = 1);

/// alpha = 1 + 10^{-m} for m = m_first..m_last.
std::vector<double> decade_alphas(int m_first, int m_last);

struct ScalingFit {
  double beta = 0.0;
  double log_intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // (alpha, |value|)
  bool consistent_with_upper_bound = false;       // beta <= 0.75 + 0.1
};

/// Least squares of log y against -log(alpha - 1); beta is the slope.
/// Needs >= 3 points with y > 0 and at least two distinct alphas.
ScalingFit fit_power_law(std::span<const std::pair<double, double>> points);

/// fit_power_law over (alpha, |lambda_min|).
ScalingFit fit_scaling_exponent(std::span<const SpectralSummary> summaries);

/// fit_power_law over (alpha, chi_lower_bound).
ScalingFit fit_chi_exponent(std::span<const SpectralSummary> summaries);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  bool converged = false;
};

/// lhs = int_0^{pi/2} (alpha-1) cos(r cos t) / ((alpha-1)^2 + 4 alpha sin^2(r cos t)) dt,
/// rhs = -4 (alpha-1)^{-3/4} - pi/2.
InequalityCheck check_inequality_12(Alpha alpha, double r, const quad::QuadratureConfig& cfg);

}  // namespace oddchi
