#pragma once

#include "rectsaw/common/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rectsaw {

namespace detail {

template <class Real>
Real theta_tolerance() {
  using std::min;
  return min(Real(1e-30), Real(std::numeric_limits<Real>::epsilon()));
}

template <class Real>
void check_nome(const Real& q) {
  if (!(q >= 0 && q < 1))
    throw InvalidArgument("theta functions need 0 <= q < 1");
}

}  // namespace detail

template <class Real>
Real pi_constant() {
  using std::atan;
  return Real(4 * atan(Real(1)));
}

/// 2 * sum_{n>=0} q^{(n+1/2)^2}
template <class Real>
Real theta2(const Real& q) {
  using std::sqrt;
  detail::check_nome(q);
  if (q == 0)
    return Real(0);
  const Real tol = detail::theta_tolerance<Real>();
  Real q14 = sqrt(sqrt(q));
  Real term = q14, sum = 0;
  Real step = q * q;  // q^{2(n+1)} for n = 0
  for (int n = 0; term > tol * sum || n == 0; ++n) {
    sum += term;
    term *= step;
    step *= q * q;
  }
  return 2 * sum;
}

/// 1 + 2 * sum_{n>=1} q^{n^2}
template <class Real>
Real theta3(const Real& q) {
  detail::check_nome(q);
  const Real tol = detail::theta_tolerance<Real>();
  Real term = q, step = q * q * q, sum = 0;
  while (term > tol) {
    sum += term;
    term *= step;
    step *= q * q;
  }
  return 1 + 2 * sum;
}

/// 1 + 2 * sum_{n>=1} (-1)^n q^{n^2}
template <class Real>
Real theta4(const Real& q) {
  detail::check_nome(q);
  const Real tol = detail::theta_tolerance<Real>();
  Real term = q, step = q * q * q, sum = 0;
  for (int sign = -1; term > tol; sign = -sign) {
    sum += sign * term;
    term *= step;
    step *= q * q;
  }
  return 1 + 2 * sum;
}

/// theta3 - theta4 = 4 * (q + q^9 + q^25 + ...); returns half of it, summed
/// directly so there is no cancellation.
template <class Real>
Real theta_odd_half(const Real& q) {
  detail::check_nome(q);
  const Real tol = detail::theta_tolerance<Real>();
  Real term = q, q8 = q * q * q * q * q * q * q * q, step = q8, sum = 0;
  while (term > tol) {
    sum += term;
    term *= step;
    step *= q8;  // odd squares 1, 9, 25, 49 are 8, 16, 24 apart
  }
  return 2 * sum;
}

}  // namespace rectsaw
