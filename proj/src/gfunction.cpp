#include "qepi/gfunction.hpp"

#include <algorithm>
#include <cmath>

#include "qepi/errors.hpp"

namespace qepi {

double g_function(double x) {
  if (x < 0.0) {
    if (x >= -1e-12) return 0.0;  // rounding slack from spectrum clamps
    throw NegativeArgument("g_function: x must be >= 0");
  }
  if (x == 0.0) return 0.0;
  return (x + 1.0) * std::log1p(x) - x * std::log(x);
}

double g_inverse(double y) {
  if (y < 0.0) {
    if (y >= -1e-12) return 0.0;
    throw NegativeArgument("g_inverse: y must be >= 0");
  }
  if (y == 0.0) return 0.0;

  double lo = 0.0;
  double hi = std::max(1.0, std::exp(y));  // g(e^y) > y, so the root is bracketed
  double x = 0.5 * hi;
  const int max_iter = 200;
  for (int it = 0; it < max_iter; ++it) {
    const double fx = g_function(x) - y;
    if (fx > 0.0)
      hi = x;
    else
      lo = x;
    const double deriv = std::log1p(1.0 / x);  // g'(x) = ln(1 + 1/x)
    double next = x - fx / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisect when Newton escapes
    const double step = std::abs(next - x);
    x = next;
    if (step <= 1e-15 * std::max(1.0, x) && std::abs(g_function(x) - y) <= 1e-12 * std::max(1.0, y))
      return x;
  }
  if (std::abs(g_function(x) - y) <= 1e-10 * std::max(1.0, y)) return x;
  throw NoConvergence("g_inverse: did not converge within 200 iterations");
}

}  // namespace qepi
