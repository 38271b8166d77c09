#pragma once

#include "rectsaw/enumerator/exit_layout.hpp"
#include "rectsaw/enumerator/link_state.hpp"
#include "rectsaw/enumerator/stage.hpp"

#include <vector>

namespace rectsaw {

/// One outcome of pushing a single state through a stage.
struct Transition {
  bool exit = false;
  LinkState state;     // valid when !exit
  int exit_index = 0;  // valid when exit
  int shift = 0;       // power of x picked up
};

/// The elementary transfer rules, independent of how weights are stored.
class StageRules {
 public:
  StageRules(const Rectangle& rect, Mode mode, Symmetry symmetry);

  const Rectangle& rectangle() const { return rect_; }
  Mode mode() const { return mode_; }
  Symmetry symmetry() const { return symmetry_; }
  const ExitLayout& layout() const { return layout_; }

  /// States produced by Start, each with its power of x.
  std::vector<Transition> start() const;

  /// Writes up to two transitions for `state` into `out`; returns the count.
  /// `slots` is the number of labels on the cut before the stage.
  int expand(const Stage& stage, int slots, const LinkState& state, Transition* out) const;

 private:
  int left(int slots, const LinkState& s, Transition* out) const;
  int bulk(int column, const LinkState& s, Transition* out) const;
  int centre(int column, const LinkState& s, Transition* out) const;
  int right(int row, int slots, const LinkState& s, Transition* out) const;
  int top(int column, int slots, const LinkState& s, Transition* out) const;
  int exit_for(Label boundary, int coord, Transition* out) const;

  Rectangle rect_;
  Mode mode_;
  Symmetry symmetry_;
  ExitLayout layout_;
};

}  // namespace rectsaw
