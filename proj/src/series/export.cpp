#include "rectsaw/series/export.hpp"

#include "rectsaw/common/error.hpp"

#include <exception>
#include <fstream>
#include <sstream>

namespace rectsaw {

using nlohmann::ordered_json;

std::string table_csv(const ExtrapolationTable& table, int digits) {
  std::ostringstream out;
  for (std::size_t k = 0; k < table.columns.size(); ++k)
    out << (k ? "," : "") << "col" << k;
  out << "\n";
  const std::size_t rows = table.columns.empty() ? 0 : table.columns[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
      if (k)
        out << ",";
      if (i < table.columns[k].size())
        out << to_string(table.columns[k][i], digits);
    }
    out << "\n";
  }
  return out.str();
}

ordered_json extrapolation_json(const Extrapolation& ex, int digits) {
  ordered_json j;
  j["method"] = to_string(ex.table.method);
  j["parameter"] = ex.table.parameter;
  j["limit"] = to_string(ex.estimate.value, digits);
  j["uncertainty"] = to_string(ex.estimate.uncertainty, 6);
  j["direction"] = to_string(ex.estimate.direction);
  j["columns"] = ex.table.columns.size();
  j["truncated"] = ex.truncated;
  if (!ex.note.empty())
    j["note"] = ex.note;
  return j;
}

std::string sequence_csv(const RatioSequence& seq, int digits) {
  std::ostringstream out;
  out << "n,ratio\n";
  for (const auto& e : seq.entries)
    out << e.n << "," << to_string(e.value, digits) << "\n";
  return out.str();
}

ordered_json sequence_json(const RatioSequence& seq, int digits) {
  ordered_json j;
  j["aspect"] = seq.aspect;
  j["entries"] = ordered_json::array();
  for (const auto& e : seq.entries)
    j["entries"].push_back({{"n", e.n}, {"value", to_string(e.value, digits)}});
  return j;
}

RatioSequence read_sequence(const std::string& path, int aspect) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  RatioSequence seq;
  seq.aspect = aspect;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      const ordered_json j = ordered_json::parse(text);
      seq.aspect = j.value("aspect", aspect);
      for (const auto& e : j.at("entries"))
        seq.entries.push_back({e.at("n").get<int>(), BigFloat(e.at("value").get<std::string>())});
    } catch (const std::exception& e) {
      throw InvalidArgument("malformed sequence file " + path + ": " + e.what());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
      if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
        continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos)
        throw InvalidArgument("expected n,value rows in " + path);
      const std::string left = line.substr(0, comma);
      if (header && left.find_first_not_of("0123456789 ") != std::string::npos) {
        header = false;
        continue;
      }
      header = false;
      std::string right = line.substr(comma + 1);
      while (!right.empty() && (right.back() == '\r' || right.back() == ' '))
        right.pop_back();
      try {
        seq.entries.push_back({std::stoi(left), BigFloat(right)});
      } catch (const std::exception&) {
        throw InvalidArgument("bad row '" + line + "' in " + path);
      }
    }
  }
  seq.validate();
  return seq;
}

}  // namespace rectsaw
