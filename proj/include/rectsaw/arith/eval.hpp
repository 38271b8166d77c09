#pragma once

#include "rectsaw/arith/numbers.hpp"
#include "rectsaw/enumerator/genfun.hpp"

namespace rectsaw {

/// Horner evaluation with exact integer coefficients.
BigFloat evaluate(const GenFun& g, const BigFloat& x);

/// G_num(x) / G_den(x).  Throws NumericalFailure for a zero denominator.
BigFloat eval_ratio(const GenFun& num, const GenFun& den, const BigFloat& x);

}  // namespace rectsaw
