#pragma once

#include "rectsaw/series/correction.hpp"
#include "rectsaw/series/extrapolate.hpp"

#include <json.hpp>

#include <string>

namespace rectsaw {

inline constexpr int kTableDigits = 30;

/// One column per extrapolation order, rows padded with blanks.
std::string table_csv(const ExtrapolationTable& table, int digits = kTableDigits);

nlohmann::ordered_json extrapolation_json(const Extrapolation& ex, int digits = kTableDigits);

/// "n,ratio" rows.
std::string sequence_csv(const RatioSequence& seq, int digits);
nlohmann::ordered_json sequence_json(const RatioSequence& seq, int digits);

/// Reads either form back.  JSON: {"aspect": r, "entries": [{"n":..,"value":".."}]}.
/// CSV: header line then n,value rows; aspect taken from `aspect`.
RatioSequence read_sequence(const std::string& path, int aspect = 0);

}  // namespace rectsaw
