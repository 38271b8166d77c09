#include "rectsaw/arith/numbers.hpp"

#include <algorithm>
#include <cmath>

namespace rectsaw {

std::string to_string(const BigFloat& value, int digits) {
  return value.str(digits);
}

int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap) {
  if (a == b)
    return cap;
  BigFloat rel = abs(a - b);
  if (b != 0)
    rel /= abs(b);
  const double d = -log10(rel).convert_to<double>();
  if (!std::isfinite(d))
    return d > 0 ? cap : 0;
  return std::clamp(static_cast<int>(std::floor(d)), 0, cap);
}

}  // namespace rectsaw
