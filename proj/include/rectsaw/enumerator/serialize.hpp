#pragma once

#include "rectsaw/enumerator/genfun.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace rectsaw {

/// Named series for one rectangle, in output order.
struct SeriesSet {
  int L = 0;
  int W = 0;
  Mode mode = Mode::Split;
  std::vector<std::pair<std::string, GenFun>> series;

  const GenFun& at(const std::string& key) const;
};

SeriesSet series_set(const Rectangle& rect, const BoundarySplit& split);
SeriesSet series_set(const Rectangle& rect, const HittingTable& table);

/// {"L":..,"W":..,"mode":"split"|"full","series":{"LR":["0","0","2",..],..}}
/// Coefficients are decimal strings.
nlohmann::ordered_json to_json(const SeriesSet& set);
SeriesSet series_from_json(const nlohmann::ordered_json& j);

/// One line per series: "<key> e:c e:c ..." with zero terms omitted, after a
/// "# LxW mode" header line.
std::string to_text(const SeriesSet& set);
SeriesSet series_from_text(const std::string& text);

/// Reads JSON or text, chosen by the first non-blank character.
SeriesSet read_series(const std::string& path);

}  // namespace rectsaw
