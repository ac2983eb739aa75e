#pragma once

#include <functional>
#include <span>

namespace oddchi::quad {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 20000;
  double min_panel_width = 1e-15;

  // Throws DomainError when a field violates its invariant.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels_used = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (G10/K21) integration of f over [lo, hi].
///
/// The interval is first cut at every breakpoint strictly inside (lo, hi);
/// after that the panel with the largest |K21 - G10| is bisected until the
/// summed estimate meets max(abs_tol, rel_tol * |value|). Running out of
/// subdivision budget yields converged = false with the best estimate.
///
/// Throws DomainError if lo >= hi or f returns a non-finite value.
QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                    const QuadratureConfig& cfg,
                                    std::span<const double> breakpoints = {});

}  // namespace oddchi::quad
