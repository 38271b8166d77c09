#include "rectsaw/enumerator/stage.hpp"

#include "rectsaw/common/error.hpp"

namespace rectsaw {

const char* to_string(StageKind kind) {
  switch (kind) {
    case StageKind::Start: return "Start";
    case StageKind::Left: return "Left";
    case StageKind::Bulk: return "Bulk";
    case StageKind::Right: return "Right";
    case StageKind::Centre: return "Centre";
    case StageKind::Top: return "Top";
  }
  return "?";
}

std::string Stage::to_string() const {
  return std::string(rectsaw::to_string(kind)) + "(" + std::to_string(row) + "," +
         std::to_string(column) + ")";
}

Schedule::Schedule(const Rectangle& rect) : width_(rect.width()), height_(rect.height()) {}

// Per row: Left, L-1 vertices, Right.
std::size_t Schedule::size() const {
  return 1 + static_cast<std::size_t>(height_ - 1) * (width_ + 1) + (width_ - 1);
}

Stage Schedule::at(std::size_t step) const {
  if (step >= size())
    throw IllegalStageOrder("schedule has no stage " + std::to_string(step));
  if (step == 0)
    return {StageKind::Start, 0, 0};
  std::size_t k = step - 1;
  const std::size_t per_row = width_ + 1;
  const std::size_t rows = height_ - 1;
  if (k < rows * per_row) {
    const int row = static_cast<int>(k / per_row) + 1;
    const int pos = static_cast<int>(k % per_row);
    if (pos == 0)
      return {StageKind::Left, row, 0};
    if (pos == width_)
      return {StageKind::Right, row, width_};
    const bool centre = row == height_ / 2 && pos == width_ / 2;
    return {centre ? StageKind::Centre : StageKind::Bulk, row, pos};
  }
  k -= rows * per_row;
  return {StageKind::Top, height_, static_cast<int>(k) + 1};
}

int Schedule::slots_before(std::size_t step) const {
  if (step == 0)
    return 0;
  const Stage s = at(step);
  switch (s.kind) {
    case StageKind::Start:
      return 0;
    case StageKind::Left:
    case StageKind::Top:
      return width_ - 1;
    default:
      return width_;
  }
}

}  // namespace rectsaw
