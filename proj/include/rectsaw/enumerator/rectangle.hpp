#pragma once

#include <string>

namespace rectsaw {

/// An L x W rectangle of the square lattice with the short sides horizontal.
/// Both sides are even so that the centre is a lattice vertex.
class Rectangle {
 public:
  /// Throws InvalidArgument unless L, W are even, L >= 2 and W >= L.
  Rectangle(int width, int height);

  int width() const { return width_; }    // L
  int height() const { return height_; }  // W

  int centre_column() const { return width_ / 2; }
  int centre_row() const { return height_ / 2; }

  /// (L-1)(W-1); also the largest possible walk length.
  int interior_vertices() const { return (width_ - 1) * (height_ - 1); }
  int max_degree() const { return interior_vertices(); }

  /// W / L when it is an integer, otherwise 0.
  int aspect() const { return height_ % width_ == 0 ? height_ / width_ : 0; }

  std::string label() const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  int width_;
  int height_;
};

/// How the boundary is resolved in the output.
enum class Mode {
  Split,        // walks to the long sides vs. to the short sides
  FullHitting,  // one series per exit point (c_x >= 0 on top, c_y >= 0 on right)
};

/// Which reflection symmetries the transfer matrix exploits.
enum class Symmetry {
  Full,     // every boundary edge present
  Reduced,  // bottom and left boundaries depleted; results doubled
};

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);

}  // namespace rectsaw
