#include "rectsaw/conformal/alpha.hpp"

#include "rectsaw/conformal/elliptic.hpp"

#include <cmath>

namespace rectsaw {

double aspect_from_alpha_excess(double c) {
  if (!(c > 0))
    throw InvalidArgument("alpha must exceed 1");
  const double alpha = 1 + c;
  const double long_side = elliptic_K_complement(std::sqrt(c * (2 + c)) / alpha);
  const double short_side = elliptic_K_complement(1 / alpha);
  return 2 * long_side / short_side;
}

double aspect_from_alpha(double alpha) { return aspect_from_alpha_excess(alpha - 1); }

}  // namespace rectsaw
