#include "rectsaw/conformal/params.hpp"

#include "rectsaw/common/error.hpp"
#include "rectsaw/conformal/alpha.hpp"
#include "rectsaw/conformal/elliptic.hpp"

#include <cmath>
#include <numbers>

namespace rectsaw {

ConformalParams conformal_params(double r, double b) {
  if (!(b > 0 && b <= 1))
    throw InvalidArgument("b must lie in (0, 1]");
  ConformalParams p;
  p.r = r;
  p.b = b;
  p.kappa = kappa_from_b(b);
  p.alpha = alpha_from_aspect(r);
  p.alpha_minus_one = alpha_minus_one(r);
  p.d = std::sqrt(p.alpha);
  const double c = p.alpha_minus_one;
  p.a = 2 / p.alpha * elliptic_K_complement(std::sqrt(c * (2 + c)) / p.alpha);
  p.c = 1 / p.alpha * elliptic_K_complement(1 / p.alpha);
  return p;
}

AsymptoticCoeffs asymptotic_coeffs(double b) {
  if (!(b > 0 && b <= 1))
    throw InvalidArgument("b must lie in (0, 1]");
  AsymptoticCoeffs k;
  const double g = std::tgamma((1 + b) / 2) / std::tgamma(b / 2);
  k.Lambda = g * g;
  k.A = k.Lambda / (b * std::pow(2.0, b));
  k.B = -0.75 * b - 0.5 - k.Lambda / 2;
  k.D = k.A / std::sin(std::numbers::pi * b / 2);
  return k;
}

}  // namespace rectsaw
