#pragma once

namespace qepi {

/// Bosonic entropy function g(x) = (x+1) ln(x+1) - x ln(x), g(0) = 0,
/// strictly increasing and concave on [0, inf).
double g_function(double x);

/// Inverse of g on [0, inf): bracketed bisection with Newton polish,
/// absolute tolerance 1e-10, iteration cap 200 (NoConvergence beyond).
/// Tiny negative y from rounding (>= -1e-12) is clamped to zero.
double g_inverse(double y);

}  // namespace qepi
