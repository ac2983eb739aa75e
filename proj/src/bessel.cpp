#include "oddchi/bessel.hpp"

#include <cmath>
#include <limits>

#include "oddchi/errors.hpp"

namespace oddchi::special {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kTwoOverPi = 0.63661977236758134308;

void require_finite(double x) {
  if (!std::isfinite(x)) throw DomainError("Bessel argument must be finite");
}

// Sum_{m>=0} (-x^2/4)^m / (m! (m+order)!) * (x/2)^order, order in {0, 1}.
// Extended precision absorbs the cancellation between alternating terms.
double ascending_series(double x, int order) {
  const long double q = -0.25L * static_cast<long double>(x) * x;
  long double term = order == 0 ? 1.0L : 0.5L * static_cast<long double>(x);
  long double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<long double>(m) * (m + order));
    sum += term;
    if (std::fabs(term) <= std::numeric_limits<long double>::epsilon() *
                               std::fabs(sum) * 1e-2L &&
        m > 2) {
      break;
    }
  }
  return static_cast<double>(sum);
}

// Hankel expansion J_n(x) ~ sqrt(2/(pi x)) (P cos w - Q sin w), x > 0,
// w = x - n pi/2 - pi/4. Summed up to the smallest term.
double hankel_asymptotic(double x, int order) {
  const double mu = 4.0 * order * order;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    const double mag = std::abs(term);
    if (mag >= last || mag < 1e-18) break;
    last = mag;
    // a_k / x^k enters P (even k) or Q (odd k) with sign (-1)^floor(k/2).
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
  }
  const double c = std::cos(x);
  const double s = std::sin(x);
  // Angle-sum identities avoid rounding x - n pi/2 - pi/4 at large x.
  double cos_w;
  double sin_w;
  if (order == 0) {
    cos_w = (c + s) * kInvSqrt2;
    sin_w = (s - c) * kInvSqrt2;
  } else {
    cos_w = (s - c) * kInvSqrt2;
    sin_w = -(s + c) * kInvSqrt2;
  }
  return std::sqrt(kTwoOverPi / x) * (p * cos_w - q * sin_w);
}

}  // namespace

double bessel_j0(double x) {
  require_finite(x);
  const double ax = std::abs(x);
  if (ax <= kSeriesLimit) return ascending_series(ax, 0);
  return hankel_asymptotic(ax, 0);
}

double bessel_j1(double x) {
  require_finite(x);
  const double ax = std::abs(x);
  const double value =
      ax <= kSeriesLimit ? ascending_series(ax, 1) : hankel_asymptotic(ax, 1);
  return x < 0.0 ? -value : value;
}

}  // namespace oddchi::special
