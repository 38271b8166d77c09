#include "rectsaw/arith/eval.hpp"

#include "rectsaw/common/error.hpp"

#include <algorithm>

namespace rectsaw {

// Works at the precision of x, whatever the ambient default.
BigFloat evaluate(const GenFun& g, const BigFloat& x) {
  ScopedPrecision guard(std::max(x.precision(), BigFloat::default_precision()));
  BigFloat acc = 0;
  const auto& c = g.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += BigFloat(*it);
  }
  return acc;
}

BigFloat eval_ratio(const GenFun& num, const GenFun& den, const BigFloat& x) {
  ScopedPrecision guard(std::max(x.precision(), BigFloat::default_precision()));
  BigFloat d = evaluate(den, x);
  if (d == 0)
    throw NumericalFailure("denominator vanishes at x");
  return evaluate(num, x) / d;
}

}  // namespace rectsaw
