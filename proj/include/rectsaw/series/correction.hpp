#pragma once

#include "rectsaw/series/ratio_sequence.hpp"

namespace rectsaw {

struct CorrectionExponent {
  double slope = 0;  // of log|R_n - R_prev| against log n
  double slope_error = 0;
  double theta = 0;  // -slope - 1
  double theta_error = 0;
  int points = 0;
};

/// Least-squares fit of log|R_i - R_{i-1}| against log n_i.  Needs at least
/// four entries with first differences of one sign.
CorrectionExponent correction_exponent(const RatioSequence& seq);

}  // namespace rectsaw
