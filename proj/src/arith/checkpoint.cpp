#include "rectsaw/arith/checkpoint.hpp"

#include "rectsaw/common/error.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace rectsaw {

using nlohmann::ordered_json;

std::string checkpoint_path(const std::string& dir, const Rectangle& rect, Mode mode,
                            std::uint32_t prime) {
  return (std::filesystem::path(dir) /
          (rect.label() + "-" + to_string(mode) + "-" + std::to_string(prime) + ".json"))
      .string();
}

void save_checkpoint(const std::string& path, const Rectangle& rect, Mode mode,
                     const ModularResult& result) {
  ordered_json j;
  j["L"] = rect.width();
  j["W"] = rect.height();
  j["mode"] = to_string(mode);
  j["prime"] = result.prime;
  j["engine_version"] = kEngineVersion;
  j["degree"] = result.degree;
  j["series"] = result.series;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      throw Error("cannot write checkpoint " + tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<ModularResult> load_checkpoint(const std::string& path, const Rectangle& rect,
                                             Mode mode, std::uint32_t prime) {
  std::ifstream in(path);
  if (!in)
    return std::nullopt;
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw InvalidState("unreadable checkpoint " + path + ": " + e.what());
  }
  if (j.value("L", -1) != rect.width() || j.value("W", -1) != rect.height() ||
      j.value("mode", std::string()) != to_string(mode) ||
      j.value("prime", std::uint32_t{0}) != prime ||
      j.value("engine_version", -1) != kEngineVersion ||
      j.value("degree", -1) != rect.max_degree())
    throw InvalidState("checkpoint " + path + " does not match this run");
  ModularResult r;
  r.prime = prime;
  r.degree = rect.max_degree();
  r.series = j.at("series").get<std::vector<std::vector<std::uint32_t>>>();
  return r;
}

}  // namespace rectsaw
