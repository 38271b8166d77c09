#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace rectsaw {

using BigInt = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 80;

/// Sets the working precision (decimal digits) of newly created BigFloat
/// values for the lifetime of the guard, restoring the previous value after.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Decimal rendering with `digits` significant digits.
std::string to_string(const BigFloat& value, int digits);

/// Number of leading significant decimal digits on which two values agree,
/// measured as floor(-log10(|a-b|/|b|)). Returns `cap` for exact equality.
int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap = 1000);

}  // namespace rectsaw
