#pragma once

#include "rectsaw/arith/numbers.hpp"
#include "rectsaw/enumerator/rectangle.hpp"
#include "rectsaw/enumerator/transfer_matrix.hpp"

#include <string>
#include <vector>

namespace rectsaw {

struct RatioEntry {
  int n;  // short side L of the n x (aspect n) rectangle
  BigFloat value;
};

/// Long-side over short-side ratios R_n(r) for rectangles of one aspect.
struct RatioSequence {
  int aspect = 0;
  std::vector<RatioEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<BigFloat> values() const;

  /// Throws InvalidArgument unless n is strictly increasing and values are
  /// positive.
  void validate() const;

  /// Entries with lo <= n <= hi.
  RatioSequence slice(int lo, int hi) const;
};

/// exact: modular passes + CRT, then Horner at x.  numeric: weights
/// evaluated at x during the sweep.  auto: exact while the polynomial
/// tables stay small (L <= 10 and degree <= 300), numeric beyond.
enum class Engine { Exact, Numeric, Auto };

Engine parse_engine(const std::string& text);
const char* to_string(Engine e);

struct RatioOptions {
  Engine engine = Engine::Auto;
  int threads = 1;
  std::size_t state_cap = kDefaultStateCap;
};

/// G_LR(x) / G_BT(x) for each rectangle.  All rectangles must share one
/// integer aspect ratio.  Works at the precision of x.
RatioSequence build_ratio_sequence(const std::vector<Rectangle>& rects, const BigFloat& x,
                                   const RatioOptions& options = {});

/// Rectangles n x (aspect n) for even n in [n_min, n_max].
std::vector<Rectangle> aspect_family(int aspect, int n_min, int n_max);

}  // namespace rectsaw
