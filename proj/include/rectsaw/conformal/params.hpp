#pragma once

namespace rectsaw {

inline double kappa_from_b(double b) { return 3.0 / (b + 0.5); }
inline double b_from_kappa(double kappa) { return 3.0 / kappa - 0.5; }

/// Map and SLE parameters for one aspect ratio.  The rectangle is the image
/// of the upper half-plane with [-1, 1] going to a side of length a and
/// [1, alpha] to a side of length c; the centre is the image of i*d.
struct ConformalParams {
  double r = 0;
  double alpha = 0;
  double alpha_minus_one = 0;
  double b = 0;
  double kappa = 0;
  double d = 0;
  double a = 0;
  double c = 0;
};

ConformalParams conformal_params(double r, double b);

/// Lambda = (Gamma((1+b)/2) / Gamma(b/2))^2 and the derived coefficients
/// A = Lambda / (b 2^b), B = -3b/4 - 1/2 - Lambda/2, D = A / sin(pi b/2).
struct AsymptoticCoeffs {
  double Lambda = 0;
  double A = 0;
  double B = 0;
  double D = 0;
};

AsymptoticCoeffs asymptotic_coeffs(double b);

}  // namespace rectsaw
