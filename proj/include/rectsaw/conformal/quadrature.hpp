#pragma once

#include <functional>

namespace rectsaw {

struct QuadratureResult {
  double value = 0;
  double error = 0;  // sum of local refinement differences
  int panels = 0;
};

/// Adaptive Gauss-Legendre: a panel is accepted once its 20-point estimate
/// agrees with the sum over its two halves to within `rel_tol` of the
/// running total.  Throws NumericalFailure (with the achieved error) when a
/// panel cannot be resolved within `max_depth` bisections.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-13, int max_depth = 60);

}  // namespace rectsaw
