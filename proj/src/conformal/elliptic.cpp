#include "rectsaw/conformal/elliptic.hpp"

#include "rectsaw/common/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rectsaw {

double agm(double a, double b) {
  for (int k = 0; k < 64 && std::abs(a - b) > 1e-16 * a; ++k) {
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return 0.5 * (a + b);
}

double elliptic_K_complement(double kp) {
  if (!(kp > 0 && kp <= 1))
    throw InvalidArgument("complementary modulus must lie in (0, 1]");
  return std::numbers::pi / (2 * agm(1.0, kp));
}

double elliptic_K(double k) {
  if (!(k >= 0 && k < 1))
    throw InvalidArgument("elliptic_K needs 0 <= k < 1");
  return elliptic_K_complement(std::sqrt((1 - k) * (1 + k)));
}

double carlson_rf(double x, double y, double z) {
  if (std::min({x, y, z}) < 0 || (x == 0) + (y == 0) + (z == 0) > 1)
    throw InvalidArgument("carlson_rf needs non-negative arguments, at most one zero");
  constexpr double kTol = 0.0008;
  double mu = 0, dx = 0, dy = 0, dz = 0;
  for (int k = 0; k < 100; ++k) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    mu = (x + y + z) / 3;
    dx = (mu - x) / mu;
    dy = (mu - y) / mu;
    dz = (mu - z) / mu;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kTol)
      break;
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1 + (e2 / 24 - 0.1 - 3 * e3 / 44) * e2 + e3 / 14) / std::sqrt(mu);
}

double elliptic_F(double x, double k) {
  if (!(k >= 0 && k < 1))
    throw InvalidArgument("elliptic_F needs 0 <= k < 1");
  if (!(x >= 0 && x <= 1))
    throw InvalidArgument("elliptic_F needs 0 <= x <= 1");
  if (x == 0)
    return 0;
  return x * carlson_rf((1 - x) * (1 + x), 1 - k * k * x * x, 1);
}

}  // namespace rectsaw
