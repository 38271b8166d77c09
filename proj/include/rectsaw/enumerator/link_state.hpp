#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rectsaw {

/// Label carried by one half-edge on the transfer-matrix cut.
///
/// Arcs of the partial walk that return to the cut are written as matched
/// Open/Close pairs (Open on the left end).  A single self-avoiding path
/// cannot produce crossing arcs, so the bracket form is canonical: equal
/// connectivities always have equal encodings.
enum class Label : std::uint8_t {
  Empty = 0,
  Open = 1,
  Close = 2,
  Side = 3,    // joined to the left or right boundary
  Bottom = 4,  // joined to the bottom (or, after Top, the top) boundary
  Centre = 5,  // joined to the centre vertex
};

inline bool is_link(Label l) { return l == Label::Open || l == Label::Close; }
inline bool is_boundary(Label l) { return l == Label::Side || l == Label::Bottom; }
char label_char(Label l);

/// Decoded view of one slot, with LINK partners resolved to indices.
struct SlotView {
  Label label;
  int partner;  // -1 unless label is Open or Close
};

/// Packed connectivity of the half-edges crossing the cut: 3 bits per slot,
/// slot 0 in the low bits.  `exit_coord` remembers where a Side/Bottom
/// strand touched the boundary (full-hitting mode only; zero otherwise).
/// The slot count is a property of the ensemble, not of the state.
struct LinkState {
  static constexpr int kMaxSlots = 21;

  std::uint64_t bits = 0;
  std::int32_t exit_coord = 0;

  Label operator[](int slot) const {
    return static_cast<Label>((bits >> (3 * slot)) & 7u);
  }
  void set(int slot, Label l) {
    const int shift = 3 * slot;
    bits = (bits & ~(std::uint64_t{7} << shift)) |
           (std::uint64_t{static_cast<std::uint8_t>(l)} << shift);
  }

  /// Index of the bracket partner of an Open or Close slot.
  int partner(int slot) const;

  bool has_boundary_label(int slots) const;

  /// True when every slot other than `a` and `b` is Empty.
  bool empty_except(int a, int b) const {
    std::uint64_t mask = (std::uint64_t{7} << (3 * a)) | (std::uint64_t{7} << (3 * b));
    return (bits & ~mask) == 0;
  }

  /// Inserts `front` at slot 0, moving every other label up by one.
  LinkState pushed_front(Label front) const {
    LinkState s = *this;
    s.bits = (bits << 3) | static_cast<std::uint8_t>(front);
    return s;
  }
  /// Drops slot `slots - 1`.
  LinkState popped_back(int slots) const {
    LinkState s = *this;
    s.bits &= (std::uint64_t{1} << (3 * (slots - 1))) - 1;
    return s;
  }

  std::vector<SlotView> decode(int slots) const;
  static LinkState encode(const std::vector<Label>& labels);
  std::string to_string(int slots) const;

  friend bool operator==(const LinkState&, const LinkState&) = default;
};

}  // namespace rectsaw
