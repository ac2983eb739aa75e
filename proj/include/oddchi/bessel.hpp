#pragma once

namespace oddchi::special {

// Bessel functions of the first kind, orders 0 and 1.
// Ascending series (extended precision) for |x| <= kSeriesLimit, Hankel
// asymptotic expansion above. Absolute error stays below 1e-12 for
// |x| <= 1e4. Non-finite input throws DomainError.
inline constexpr double kSeriesLimit = 17.0;

double bessel_j0(double x);
double bessel_j1(double x);

}  // namespace oddchi::special
