#pragma once

#include "rectsaw/arith/exact.hpp"

#include <optional>
#include <string>

namespace rectsaw {

inline constexpr int kEngineVersion = 1;

/// "<dir>/<L>x<W>-<mode>-<prime>.json"
std::string checkpoint_path(const std::string& dir, const Rectangle& rect, Mode mode,
                            std::uint32_t prime);

void save_checkpoint(const std::string& path, const Rectangle& rect, Mode mode,
                     const ModularResult& result);

/// Empty when the file is missing.  A file whose header does not match the
/// request throws InvalidState.
std::optional<ModularResult> load_checkpoint(const std::string& path, const Rectangle& rect,
                                             Mode mode, std::uint32_t prime);

}  // namespace rectsaw
