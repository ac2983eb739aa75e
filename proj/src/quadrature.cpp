#include "oddchi/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "oddchi/errors.hpp"

namespace oddchi::quad {

namespace {

// 21-point Kronrod abscissae on [0, 1]; odd positions are the 10-point
// Gauss nodes. Values from QUADPACK (Fullerton, 80-digit arithmetic).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at x = " << x;
    throw DomainError(msg.str());
  }
  return y;
}

Panel gauss_kronrod21(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = checked(f, center);
  double kronrod = kWgk[10] * fc;
  double gauss = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double pair = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return Panel{lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

double tolerance(const QuadratureConfig& cfg, double value) {
  return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 ||
      !(min_panel_width > 0.0)) {
    throw DomainError(
        "QuadratureConfig requires abs_tol > 0, rel_tol > 0, "
        "max_subdivisions >= 1, min_panel_width > 0");
  }
}

QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                    const QuadratureConfig& cfg,
                                    std::span<const double> breakpoints) {
  cfg.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("integrate_adaptive requires finite lo < hi");
  }

  std::vector<double> cuts{lo};
  std::vector<double> inner(breakpoints.begin(), breakpoints.end());
  std::sort(inner.begin(), inner.end());
  for (double b : inner) {
    if (b > cuts.back() && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);

  std::priority_queue<Panel, std::vector<Panel>, ByError> active;
  std::vector<Panel> frozen;  // panels too narrow to split further
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Panel p = gauss_kronrod21(f, cuts[i], cuts[i + 1]);
    value += p.value;
    error += p.error;
    active.push(p);
  }
  int panels = static_cast<int>(cuts.size()) - 1;

  // Exact re-summation; the running sums drift after many updates.
  auto resum = [&]() {
    std::vector<Panel> all = frozen;
    auto copy = active;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    value = 0.0;
    error = 0.0;
    for (const Panel& p : all) {
      value += p.value;
      error += p.error;
    }
  };

  bool converged = false;
  while (true) {
    if (error <= tolerance(cfg, value)) {
      resum();
      if (error <= tolerance(cfg, value)) {
        converged = true;
        break;
      }
    }
    if (active.empty() || panels >= cfg.max_subdivisions) break;

    const Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (0.5 * (worst.hi - worst.lo) < cfg.min_panel_width || mid <= worst.lo ||
        mid >= worst.hi) {
      frozen.push_back(worst);
      continue;
    }
    const Panel left = gauss_kronrod21(f, worst.lo, mid);
    const Panel right = gauss_kronrod21(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++panels;
  }
  if (!converged) resum();

  return QuadratureResult{value, error, panels, converged};
}

}  // namespace oddchi::quad
