#pragma once

#include <string>
#include <vector>

namespace rectsaw {

// The enumeration reports walks to the long sides over walks to the short
// sides (> 1 for r > 1).  The hitting integrals give the reciprocal.  Both
// are wrapped so the orientation is part of the type.
struct ShortOverLong;

struct LongOverShort {
  double value;
  ShortOverLong inverted() const;
};

struct ShortOverLong {
  double value;
  LongOverShort inverted() const { return {1.0 / value}; }
};

inline ShortOverLong LongOverShort::inverted() const { return {1.0 / value}; }

/// Ratio of the hitting density integrated over a short side to the same
/// over a long side, by quadrature.  alpha > 1, 0 < b <= 1.
ShortOverLong ratio_exact(double alpha, double b);

/// Same, taking alpha - 1 so that alpha close to 1 loses nothing.
ShortOverLong ratio_exact_excess(double alpha_minus_one, double b);

/// The numerator and denominator integrals separately.
struct HittingIntegrals {
  double short_side;
  double long_side;
};
HittingIntegrals hitting_integrals(double alpha_minus_one, double b);

/// Prefactor of the e^{-b pi r/2} correction.  `Printed` is 2^{2b+1};
/// `Intro` (2^{b+1}) and `Chain` (2^{2b}) are the two other readings that
/// appear alongside it.
enum class AsymptoticVariant { Printed, Intro, Chain };

const char* to_string(AsymptoticVariant v);

/// (2^{2b+1} Lambda / b) e^{-b pi r/2} [1 + Lambda P e^{-b pi r/2} / (b sin(pi b/2))
///   + 4 (b - 1 + 2 Lambda) e^{-pi r/2}], with P the variant prefactor.
ShortOverLong ratio_asymptotic(double r, double b,
                               AsymptoticVariant variant = AsymptoticVariant::Printed,
                               bool leading_only = false);

struct VariantScore {
  AsymptoticVariant variant;
  double value;
  double relative_error;  // against ratio_exact
  int significant_digits;
};

/// Scores every variant, plus the leading term alone (reported with the
/// Printed tag in the last entry), against the quadrature.
std::vector<VariantScore> audit_asymptotic_variants(double r, double b);

enum class FitMethod { ExactIntegral, Asymptotic };

FitMethod parse_fit_method(const std::string& text);
const char* to_string(FitMethod m);

struct FitResult {
  double b;
  double kappa;
};

/// Solves ratio(r, b) = 1 / observed for b in (0, 1).
FitResult fit_b(double r, LongOverShort observed, FitMethod method);

}  // namespace rectsaw
