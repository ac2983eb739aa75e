#include "oddchi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "oddchi/bessel.hpp"
#include "oddchi/errors.hpp"

namespace oddchi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value) || !(value > 1.0) || !(value <= 2.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "alpha must satisfy 1 < alpha <= 2 (got " << value << ")";
    throw DomainError(msg.str());
  }
}

RadialFrequency::RadialFrequency(double r) : r_(r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw DomainError("radial frequency must be finite and >= 0");
  }
}

RadialFrequency RadialFrequency::from_planar(double r, double s) {
  return RadialFrequency(std::hypot(r, s));
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::ClosedForm:
      return "closed_form";
    case Method::BesselSeries:
      return "bessel_series";
    case Method::ComplexForm:
      return "complex_form";
  }
  return "unknown";
}

double lambda_at_zero(Alpha alpha) {
  const double a = alpha.value();
  return kTwoPi * a / (a - 1.0);
}

std::vector<double> spike_breakpoints(double r, double alpha, double upper) {
  std::vector<double> out;
  if (r <= 0.0) return out;
  const double half_width = (alpha - 1.0) / (2.0 * std::sqrt(alpha));
  const double x_lo = upper > 0.5 * kPi ? -r : 0.0;
  const double x_hi = r;

  std::vector<double> offsets{0.0};
  for (double d = half_width; d < 0.5 * kPi; d *= 4.0) {
    offsets.push_back(d);
    offsets.push_back(-d);
  }

  const auto m_lo = static_cast<long>(std::floor((x_lo - 0.5 * kPi) / kPi));
  const auto m_hi = static_cast<long>(std::ceil((x_hi + 0.5 * kPi) / kPi));
  for (long m = m_lo; m <= m_hi; ++m) {
    const double center = kPi * static_cast<double>(m);
    for (double d : offsets) {
      const double x = center + d;
      if (x < x_lo || x > x_hi) continue;
      const double theta = std::acos(std::clamp(x / r, -1.0, 1.0));
      if (theta > 0.0 && theta < upper) out.push_back(theta);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EigenvalueSample lambda_closed_form(RadialFrequency r, Alpha alpha,
                                    const quad::QuadratureConfig& cfg, bool spike_aware) {
  const double a = alpha.value();
  const double rv = r.value();
  const double am1 = a - 1.0;
  const double scale = a * am1;
  const double am1_sq = am1 * am1;
  auto integrand = [=](double theta) {
    const double x = rv * std::cos(theta);
    const double s = std::sin(x);
    return scale * std::cos(x) / (am1_sq + 4.0 * a * s * s);
  };
  const auto cuts = spike_aware ? spike_breakpoints(rv, a, 0.5 * kPi) : std::vector<double>{};
  const auto res = quad::integrate_adaptive(integrand, 0.0, 0.5 * kPi, cfg, cuts);
  return EigenvalueSample{rv,           a,  4.0 * res.value, Method::ClosedForm,
                          4.0 * res.error_estimate, res.converged, res.panels_used};
}

std::int64_t bessel_series_terms(Alpha alpha, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("series tolerance must be positive and finite");
  }
  const double a = alpha.value();
  const double prefactor = kTwoPi / (1.0 - 1.0 / a);
  auto tail = [&](double k) { return prefactor * std::pow(a, -k); };
  double k = std::ceil(std::log(prefactor / tol) / std::log(a));
  k = std::max(k, 0.0);
  // Guard the analytic estimate against rounding in either direction.
  while (k > 0.0 && tail(k - 1.0) <= tol) k -= 1.0;
  while (tail(k) > tol) k += 1.0;
  if (k > 9.0e18) throw ResourceError("series term count overflows");
  return static_cast<std::int64_t>(k);
}

EigenvalueSample lambda_bessel_series(RadialFrequency r, Alpha alpha, double tol,
                                      std::int64_t term_cap) {
  const std::int64_t terms = bessel_series_terms(alpha, tol);
  if (terms > term_cap) {
    std::ostringstream msg;
    msg << "Bessel series needs " << terms << " terms, cap is " << term_cap;
    throw ResourceError(msg.str());
  }
  const double a = alpha.value();
  const double rv = r.value();
  const double ratio = 1.0 / a;
  long double sum = 0.0L;
  double weight = 1.0;
  for (std::int64_t k = 0; k < terms; ++k) {
    sum += static_cast<long double>(weight) *
           special::bessel_j0(static_cast<double>(2 * k + 1) * rv);
    weight *= ratio;
  }
  const double tail = kTwoPi * std::pow(a, -static_cast<double>(terms)) / (1.0 - ratio);
  return EigenvalueSample{rv, a, kTwoPi * static_cast<double>(sum), Method::BesselSeries,
                          tail, true, terms};
}

ComplexIntegral lambda_complex_form(RadialFrequency r, Alpha alpha,
                                    const quad::QuadratureConfig& cfg) {
  const double a = alpha.value();
  const double rv = r.value();
  auto value_at = [=](double theta) {
    const std::complex<double> z = std::polar(1.0, rv * std::cos(theta));
    return z / (1.0 - z * z / a);
  };
  // The integrand depends on cos(theta) only, so [-pi, pi] is twice [0, pi].
  const auto cuts = spike_breakpoints(rv, a, kPi);
  const auto re = quad::integrate_adaptive([&](double t) { return value_at(t).real(); }, 0.0,
                                           kPi, cfg, cuts);
  const auto im = quad::integrate_adaptive([&](double t) { return value_at(t).imag(); }, 0.0,
                                           kPi, cfg, cuts);
  return ComplexIntegral{2.0 * re.value, 2.0 * im.value,
                         2.0 * (re.error_estimate + im.error_estimate),
                         re.converged && im.converged};
}

double c_alpha_eigenvalue(double lambda, Alpha alpha) {
  return 1.0 - (alpha.value() - 1.0) / kTwoPi * lambda;
}

EigenvalueSample lambda_reference(RadialFrequency r, Alpha alpha,
                                  const quad::QuadratureConfig& cfg, bool spike_aware) {
  return lambda_closed_form(r, alpha, cfg, spike_aware);
}

}  // namespace oddchi
