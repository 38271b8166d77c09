#pragma once

#include "rectsaw/enumerator/rectangle.hpp"

#include <string>

namespace rectsaw {

/// Positions of the exit weights in the side table kept next to the link
/// states.  Split mode has two entries (LR, BT).  Full-hitting mode has one
/// entry per right-boundary row c_y = 0..W/2-1 followed by one per top
/// column c_x = 0..L/2-1.
class ExitLayout {
 public:
  ExitLayout(const Rectangle& rect, Mode mode)
      : mode_(mode), half_width_(rect.width() / 2), half_height_(rect.height() / 2) {}

  Mode mode() const { return mode_; }
  int size() const { return mode_ == Mode::Split ? 2 : half_height_ + half_width_; }

  int left_right(int cy) const { return mode_ == Mode::Split ? 0 : cy; }
  int bottom_top(int cx) const { return mode_ == Mode::Split ? 1 : half_height_ + cx; }

  /// "LR", "BT", "cy=k" or "cx=k".
  std::string key(int index) const;

 private:
  Mode mode_;
  int half_width_;
  int half_height_;
};

}  // namespace rectsaw
