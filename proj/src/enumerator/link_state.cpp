#include "rectsaw/enumerator/link_state.hpp"

#include "rectsaw/common/error.hpp"

namespace rectsaw {

char label_char(Label l) {
  switch (l) {
    case Label::Empty: return '.';
    case Label::Open: return '(';
    case Label::Close: return ')';
    case Label::Side: return 'S';
    case Label::Bottom: return 'B';
    case Label::Centre: return 'X';
  }
  return '?';
}

int LinkState::partner(int slot) const {
  const Label l = (*this)[slot];
  if (l == Label::Open) {
    int depth = 0;
    for (int k = slot + 1; k < kMaxSlots; ++k) {
      Label m = (*this)[k];
      if (m == Label::Open) {
        ++depth;
      } else if (m == Label::Close) {
        if (depth == 0)
          return k;
        --depth;
      }
    }
  } else if (l == Label::Close) {
    int depth = 0;
    for (int k = slot - 1; k >= 0; --k) {
      Label m = (*this)[k];
      if (m == Label::Close) {
        ++depth;
      } else if (m == Label::Open) {
        if (depth == 0)
          return k;
        --depth;
      }
    }
  }
  throw InvalidState("slot " + std::to_string(slot) + " has no bracket partner");
}

bool LinkState::has_boundary_label(int slots) const {
  for (int k = 0; k < slots; ++k)
    if (is_boundary((*this)[k]))
      return true;
  return false;
}

std::vector<SlotView> LinkState::decode(int slots) const {
  std::vector<SlotView> out(slots);
  for (int k = 0; k < slots; ++k) {
    out[k].label = (*this)[k];
    out[k].partner = is_link(out[k].label) ? partner(k) : -1;
  }
  return out;
}

LinkState LinkState::encode(const std::vector<Label>& labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxSlots))
    throw InvalidArgument("too many slots for a packed link state");
  LinkState s;
  int depth = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    s.set(static_cast<int>(k), labels[k]);
    if (labels[k] == Label::Open)
      ++depth;
    else if (labels[k] == Label::Close && --depth < 0)
      throw InvalidState("unbalanced link labels");
  }
  if (depth != 0)
    throw InvalidState("unbalanced link labels");
  return s;
}

std::string LinkState::to_string(int slots) const {
  std::string out;
  for (int k = 0; k < slots; ++k)
    out += label_char((*this)[k]);
  if (exit_coord != 0)
    out += "@" + std::to_string(exit_coord);
  return out;
}

}  // namespace rectsaw
