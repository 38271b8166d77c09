#pragma once

namespace rectsaw {

/// Arithmetic-geometric mean.
double agm(double a, double b);

/// Complete integral of the first kind, modulus k in [0, 1).
double elliptic_K(double k);

/// K as a function of the complementary modulus k' = sqrt(1 - k^2); keeps
/// full accuracy when k is within rounding of 1.
double elliptic_K_complement(double kp);

/// Carlson's symmetric R_F by duplication.
double carlson_rf(double x, double y, double z);

/// Jacobi form F(x, k) = int_0^x dt / (sqrt(1 - t^2) sqrt(1 - k^2 t^2)),
/// 0 <= x <= 1, 0 <= k < 1.
double elliptic_F(double x, double k);

}  // namespace rectsaw
