#pragma once

#include "rectsaw/conformal/theta.hpp"

namespace rectsaw {

/// sqrt(alpha) = theta3(q) / theta2(q), q = exp(-2 pi / r).
template <class Real>
Real alpha_from_aspect(const Real& r) {
  using std::exp;
  if (!(r >= 1))
    throw InvalidArgument("aspect ratio must be at least 1");
  const Real q = exp(-2 * pi_constant<Real>() / r);
  const Real s = theta3(q) / theta2(q);
  return s * s;
}

/// alpha - 1 through the conjugate nome q' = exp(-pi r / 2), where
/// sqrt(alpha) = theta3(q') / theta4(q').  Accurate even when alpha is
/// within rounding of 1.
template <class Real>
Real alpha_minus_one(const Real& r) {
  using std::exp;
  if (!(r >= 1))
    throw InvalidArgument("aspect ratio must be at least 1");
  const Real q = exp(-pi_constant<Real>() * r / 2);
  const Real t3 = theta3(q), t4 = theta4(q);
  return 2 * theta_odd_half(q) * (t3 + t4) / (t4 * t4);
}

/// 1 + 8 e^{-pi r/2} + 32 e^{-pi r}; error O(e^{-3 pi r/2}).
template <class Real>
Real alpha_asymptotic(const Real& r) {
  using std::exp;
  const Real e = exp(-pi_constant<Real>() * r / 2);
  return 1 + 8 * e + 32 * e * e;
}

/// Singular-modulus closed form at r = 10:
/// sqrt(2 + 24 s) / (1 + 12 s), s = sqrt(161 sqrt(5) - 360).
template <class Real>
Real alpha_closed_form_r10() {
  using std::sqrt;
  const Real s = sqrt(161 * sqrt(Real(5)) - 360);
  return Real(sqrt(2 + 24 * s) / (1 + 12 * s));
}

/// r = 2 K(1/alpha) / K(sqrt(alpha^2 - 1) / alpha), from alpha - 1.
double aspect_from_alpha_excess(double alpha_minus_one);
double aspect_from_alpha(double alpha);

}  // namespace rectsaw
