#include "oddchi/bound.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oddchi/errors.hpp"
#include "oddchi/parallel.hpp"

namespace oddchi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double lambda_at(double r, Alpha alpha, const ScanConfig& cfg) {
  return lambda_reference(RadialFrequency(r), alpha, cfg.quad, cfg.spike_aware).lambda;
}

}  // namespace

double ScanConfig::step_for(Alpha alpha) const {
  if (coarse_step) return *coarse_step;
  return std::min(0.05, 5.0 * (alpha.value() - 1.0));
}

void ScanConfig::validate() const {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_min < r_max) || r_min < 0.0) {
    throw DomainError("ScanConfig requires 0 <= r_min < r_max");
  }
  if (coarse_step && !(*coarse_step > 0.0)) {
    throw DomainError("ScanConfig requires coarse_step > 0");
  }
  if (!(refine_tol > 0.0)) throw DomainError("ScanConfig requires refine_tol > 0");
  quad.validate();
}

LambdaMin find_lambda_min(Alpha alpha, const ScanConfig& cfg) {
  cfg.validate();
  const double step = cfg.step_for(alpha);
  const auto intervals = static_cast<std::size_t>(std::ceil((cfg.r_max - cfg.r_min) / step));

  LambdaMin out;
  out.lambda_min = std::numeric_limits<double>::infinity();
  out.lambda_max_scanned = -std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  std::vector<double> grid;
  grid.reserve(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid.push_back(std::min(cfg.r_min + static_cast<double>(i) * step, cfg.r_max));
  }
  if (cfg.spike_aware) {
    // Near r = m pi the theta = 0 endpoint spike produces a one-sided dip of
    // width ~(alpha - 1), narrower than the coarse step.
    const double w = alpha.value() - 1.0;
    const auto m_first = static_cast<long>(std::ceil((cfg.r_min - 4.0 * w) / kPi));
    for (long m = std::max(m_first, 1L); kPi * static_cast<double>(m) - 2.0 * w <= cfg.r_max; ++m) {
      for (int t = -8; t <= 16; ++t) {
        const double r = kPi * static_cast<double>(m) + 0.25 * t * w;
        if (r >= cfg.r_min && r <= cfg.r_max) grid.push_back(r);
      }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = lambda_at(grid[i], alpha, cfg);
    if (v < out.lambda_min) {
      out.lambda_min = v;
      best = i;
    }
    out.lambda_max_scanned = std::max(out.lambda_max_scanned, v);
  }
  out.evaluations = grid.size();
  out.r_star = grid[best];
  if (!(out.lambda_min < 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "no negative lambda on [" << cfg.r_min << ", " << cfg.r_max << "] for alpha = "
        << alpha.value() << "; widen the scan range";
    throw ScanError(msg.str());
  }

  // Golden-section search on the bracketing grid cells.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = grid[best > 0 ? best - 1 : 0];
  double hi = grid[std::min(best + 1, grid.size() - 1)];
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = lambda_at(x1, alpha, cfg);
  double f2 = lambda_at(x2, alpha, cfg);
  out.evaluations += 2;
  while (hi - lo > cfg.refine_tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = lambda_at(x1, alpha, cfg);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = lambda_at(x2, alpha, cfg);
    }
    ++out.evaluations;
  }
  const double r_refined = f1 <= f2 ? x1 : x2;
  const double v_refined = std::min(f1, f2);
  if (v_refined < out.lambda_min) {
    out.lambda_min = v_refined;
    out.r_star = r_refined;
  }
  return out;
}

SpectralSummary summarize_bound(Alpha alpha, double lambda_min, double r_at_min,
                                std::optional<double> lambda_max) {
  const double a = alpha.value();
  const double c = (a - 1.0) / kTwoPi;
  double rho = std::max(std::abs(1.0 - c * lambda_min), a - 1.0);
  if (lambda_max) rho = std::max(rho, std::abs(1.0 - c * *lambda_max));
  if (!(rho > 1.0)) {
    throw ScanError("spectral radius of C_alpha is 1: the bound is undefined");
  }
  return SpectralSummary{a, lambda_min, r_at_min, rho, rho / (rho - 1.0)};
}

SpectralSummary chi_lower_bound(Alpha alpha, const ScanConfig& cfg) {
  const LambdaMin m = find_lambda_min(alpha, cfg);
  return summarize_bound(alpha, m.lambda_min, m.r_star, m.lambda_max_scanned);
}

std::vector<SweepEntry> sweep_alpha(std::span<const double> alphas, const ScanConfig& cfg,
                                    int jobs) {
  if (alphas.empty()) throw DomainError("sweep_alpha needs at least one alpha");
  std::vector<SweepEntry> out(alphas.size());
  parallel_for_index(alphas.size(), jobs, [&](std::size_t i) {
    SweepEntry& e = out[i];
    e.alpha = alphas[i];
    try {
      e.summary = chi_lower_bound(Alpha(alphas[i]), cfg);
    } catch (const std::exception& ex) {
      e.status = ex.what();
    }
  });
  return out;
}

std::vector<double> decade_alphas(int m_first, int m_last) {
  if (m_first > m_last || m_first < 0) {
    throw DomainError("decade range must satisfy 0 <= m1 <= m2");
  }
  std::vector<double> out;
  for (int m = m_first; m <= m_last; ++m) out.push_back(1.0 + std::pow(10.0, -m));
  return out;
}

ScalingFit fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw DomainError("scaling fit needs at least 3 points");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [alpha, y] : points) {
    if (!(alpha > 1.0) || !(y > 0.0) || !std::isfinite(y)) {
      throw DomainError("scaling fit needs alpha > 1 and positive finite values");
    }
    xs.push_back(-std::log(alpha - 1.0));
    ys.push_back(std::log(y));
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("scaling fit is degenerate: all alpha equal");

  ScalingFit fit;
  fit.beta = sxy / sxx;
  fit.log_intercept = my - fit.beta * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.log_intercept + fit.beta * xs[i]);
    ss_res += e * e;
  }
  // A flat series fitted exactly has syy = 0; call that a perfect fit.
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.points.assign(points.begin(), points.end());
  fit.consistent_with_upper_bound = fit.beta <= 0.75 + 0.1;
  return fit;
}

ScalingFit fit_scaling_exponent(std::span<const SpectralSummary> summaries) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : summaries) {
    if (!(s.lambda_min < 0.0)) throw DomainError("scaling fit needs lambda_min < 0");
    pts.emplace_back(s.alpha, std::abs(s.lambda_min));
  }
  return fit_power_law(pts);
}

ScalingFit fit_chi_exponent(std::span<const SpectralSummary> summaries) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : summaries) pts.emplace_back(s.alpha, s.chi_lower_bound);
  return fit_power_law(pts);
}

InequalityCheck check_inequality_12(Alpha alpha, double r, const quad::QuadratureConfig& cfg) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("check_inequality_12 needs r > 0");
  const double a = alpha.value();
  const double am1 = a - 1.0;
  auto h = [=](double theta) {
    const double x = r * std::cos(theta);
    const double s = std::sin(x);
    return am1 * std::cos(x) / (am1 * am1 + 4.0 * a * s * s);
  };
  const auto cuts = spike_breakpoints(r, a, 0.5 * kPi);
  const auto res = quad::integrate_adaptive(h, 0.0, 0.5 * kPi, cfg, cuts);
  InequalityCheck out;
  out.lhs = res.value;
  out.rhs = -4.0 * std::pow(am1, -0.75) - 0.5 * kPi;
  out.holds = out.lhs >= out.rhs;
  out.converged = res.converged;
  return out;
}

}  // namespace oddchi
