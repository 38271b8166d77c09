#include "rectsaw/enumerator/serialize.hpp"

#include "rectsaw/common/error.hpp"

#include <fstream>
#include <sstream>

namespace rectsaw {

using nlohmann::ordered_json;

const GenFun& SeriesSet::at(const std::string& key) const {
  for (const auto& [k, g] : series)
    if (k == key)
      return g;
  throw InvalidArgument("no series named '" + key + "'");
}

SeriesSet series_set(const Rectangle& rect, const BoundarySplit& split) {
  return {rect.width(), rect.height(), Mode::Split, {{"LR", split.lr}, {"BT", split.bt}}};
}

SeriesSet series_set(const Rectangle& rect, const HittingTable& table) {
  SeriesSet s{rect.width(), rect.height(), Mode::FullHitting, {}};
  for (std::size_t k = 0; k < table.top.size(); ++k)
    s.series.emplace_back("cx=" + std::to_string(k), table.top[k]);
  for (std::size_t k = 0; k < table.right.size(); ++k)
    s.series.emplace_back("cy=" + std::to_string(k), table.right[k]);
  return s;
}

ordered_json to_json(const SeriesSet& set) {
  ordered_json j;
  j["L"] = set.L;
  j["W"] = set.W;
  j["mode"] = to_string(set.mode);
  ordered_json series = ordered_json::object();
  for (const auto& [key, g] : set.series) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : g.coeffs())
      coeffs.push_back(c.str());
    series[key] = coeffs;
  }
  j["series"] = series;
  return j;
}

SeriesSet series_from_json(const ordered_json& j) {
  SeriesSet s;
  s.L = j.at("L").get<int>();
  s.W = j.at("W").get<int>();
  s.mode = parse_mode(j.at("mode").get<std::string>());
  for (const auto& [key, arr] : j.at("series").items()) {
    std::vector<BigInt> c;
    for (const auto& v : arr)
      c.emplace_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
    s.series.emplace_back(key, GenFun(std::move(c)));
  }
  return s;
}

std::string to_text(const SeriesSet& set) {
  std::ostringstream out;
  out << "# " << set.L << "x" << set.W << " " << to_string(set.mode) << "\n";
  for (const auto& [key, g] : set.series) {
    out << key;
    for (std::size_t k = 0; k < g.coeffs().size(); ++k)
      if (!g.coeffs()[k].is_zero())
        out << " " << k << ":" << g.coeffs()[k].str();
    out << "\n";
  }
  return out.str();
}

SeriesSet series_from_text(const std::string& text) {
  SeriesSet s;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream fields(line);
    if (line[0] == '#') {
      std::string hash, dims, mode;
      fields >> hash >> dims >> mode;
      const auto x = dims.find('x');
      if (x == std::string::npos)
        throw InvalidArgument("bad header line: " + line);
      s.L = std::stoi(dims.substr(0, x));
      s.W = std::stoi(dims.substr(x + 1));
      s.mode = parse_mode(mode);
      header = true;
      continue;
    }
    std::string key, term;
    fields >> key;
    std::vector<BigInt> c;
    while (fields >> term) {
      const auto colon = term.find(':');
      if (colon == std::string::npos)
        throw InvalidArgument("bad term '" + term + "'");
      const auto k = static_cast<std::size_t>(std::stoul(term.substr(0, colon)));
      if (c.size() <= k)
        c.resize(k + 1);
      c[k] = BigInt(term.substr(colon + 1));
    }
    s.series.emplace_back(key, GenFun(std::move(c)));
  }
  if (!header)
    throw InvalidArgument("missing '# LxW mode' header");
  return s;
}

SeriesSet read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return series_from_json(ordered_json::parse(text));
  return series_from_text(text);
}

}  // namespace rectsaw
