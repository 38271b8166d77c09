#pragma once

#include "rectsaw/arith/numbers.hpp"

#include <string>

namespace rectsaw {

enum class CriticalSource { MnemonicRoot, Literature, Given };

struct CriticalPoint {
  BigFloat x;
  CriticalSource source;
};

inline constexpr const char* kLiteratureXc = "0.37905227774965";

/// Positive root of 581 x^4 + 7 x^2 - 13, sqrt((-7 + sqrt(30261)) / 1162),
/// at `digits` decimal digits.  Throws for digits < 16.
CriticalPoint critical_point(unsigned digits = kDefaultDigits);

/// "mnemonic", "literature" or a decimal literal.
CriticalPoint parse_critical_point(const std::string& choice, unsigned digits = kDefaultDigits);

/// 581 x^4 + 7 x^2 - 13
BigFloat mnemonic_residual(const BigFloat& x);

}  // namespace rectsaw
