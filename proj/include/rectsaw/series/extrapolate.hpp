#pragma once

#include "rectsaw/series/ratio_sequence.hpp"

#include <string>
#include <vector>

namespace rectsaw {

enum class Method { BulirschStoer, LevinU, BrezinskiTheta, Neville };

Method parse_method(const std::string& text);
const char* to_string(Method m);

enum class Direction { Increasing, Decreasing, None };
const char* to_string(Direction d);

/// columns[0] is the input; columns[k][i] is the k-th order estimate built
/// from entries i, i+1, ...  For the iterated Brezinski transform each
/// column is one iteration and is three entries shorter than the last.
struct ExtrapolationTable {
  Method method = Method::BulirschStoer;
  double parameter = 1;
  std::vector<std::vector<BigFloat>> columns;
};

struct LimitEstimate {
  BigFloat value;
  BigFloat uncertainty;  // half the spread of the last entries of the two deepest columns
  Method method = Method::BulirschStoer;
  Direction direction = Direction::None;
};

struct Extrapolation {
  ExtrapolationTable table;
  LimitEstimate estimate;
  bool truncated = false;  // a column hit a vanishing denominator
  std::string note;
};

/// Builds the table for `seq` and reads off the limit.  `theta` is the
/// correction exponent (Bulirsch-Stoer step ratio exponent, Neville
/// abscissa exponent); Levin u and Brezinski ignore it.  Needs at least
/// `min_entries` entries (three unless the caller lowers it).
Extrapolation extrapolate(const RatioSequence& seq, Method method, double theta = 1.0,
                          std::size_t min_entries = 3);

/// The highest column with at least two entries.
const std::vector<BigFloat>& top_column(const ExtrapolationTable& table);

}  // namespace rectsaw
