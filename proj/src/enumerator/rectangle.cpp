#include "rectsaw/enumerator/rectangle.hpp"

#include "rectsaw/common/error.hpp"

namespace rectsaw {

Rectangle::Rectangle(int width, int height) : width_(width), height_(height) {
  if (width % 2 != 0 || height % 2 != 0)
    throw InvalidArgument("L and W must be even");
  if (width < 2)
    throw InvalidArgument("L must be at least 2");
  if (height < width)
    throw InvalidArgument("W must not be smaller than L");
}

std::string Rectangle::label() const {
  return std::to_string(width_) + "x" + std::to_string(height_);
}

const char* to_string(Mode mode) {
  return mode == Mode::Split ? "split" : "full";
}

Mode parse_mode(const std::string& text) {
  if (text == "split")
    return Mode::Split;
  if (text == "full" || text == "full-hitting")
    return Mode::FullHitting;
  throw InvalidArgument("unknown mode '" + text + "' (expected split or full)");
}

}  // namespace rectsaw
