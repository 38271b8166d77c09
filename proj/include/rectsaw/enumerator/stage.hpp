#pragma once

#include "rectsaw/enumerator/rectangle.hpp"

#include <cstddef>
#include <string>

namespace rectsaw {

enum class StageKind { Start, Left, Bulk, Right, Centre, Top };

const char* to_string(StageKind kind);

/// One elementary transfer operation and where it acts.
/// Rows run 1..W-1 bottom to top and columns 1..L-1 left to right over the
/// interior vertices; Top stages carry row W and the column of the vertical
/// half-edge being closed off.  Start carries row 0, column 0.
struct Stage {
  StageKind kind = StageKind::Start;
  int row = 0;
  int column = 0;

  friend bool operator==(const Stage&, const Stage&) = default;
  std::string to_string() const;
};

/// The fixed sequence of stages that builds a rectangle:
/// Start, then per row Left, (Bulk|Centre) x (L-1), Right, then Top x (L-1).
class Schedule {
 public:
  explicit Schedule(const Rectangle& rect);

  std::size_t size() const;
  Stage at(std::size_t step) const;

  /// Number of labels on the cut before stage `step` is applied.
  int slots_before(std::size_t step) const;

 private:
  int width_;
  int height_;
};

}  // namespace rectsaw
