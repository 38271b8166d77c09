#include "rectsaw/enumerator/exit_layout.hpp"

namespace rectsaw {

std::string ExitLayout::key(int index) const {
  if (mode_ == Mode::Split)
    return index == 0 ? "LR" : "BT";
  if (index < half_height_)
    return "cy=" + std::to_string(index);
  return "cx=" + std::to_string(index - half_height_);
}

}  // namespace rectsaw
