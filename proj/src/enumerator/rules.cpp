#include "rectsaw/enumerator/rules.hpp"

#include "rectsaw/common/error.hpp"

namespace rectsaw {

namespace {

Transition keep(const LinkState& s, int shift) {
  Transition t;
  t.state = s;
  t.shift = shift;
  return t;
}

}  // namespace

StageRules::StageRules(const Rectangle& rect, Mode mode, Symmetry symmetry)
    : rect_(rect), mode_(mode), symmetry_(symmetry), layout_(rect, mode) {
  if (mode == Mode::FullHitting && symmetry == Symmetry::Full)
    throw InvalidArgument("full-hitting enumeration runs on the reduced lattice only");
  if (rect.width() > LinkState::kMaxSlots)
    throw InvalidArgument("rectangle too wide for packed link states (L <= 20)");
}

std::vector<Transition> StageRules::start() const {
  std::vector<Transition> out;
  out.push_back(keep(LinkState{}, 0));
  if (symmetry_ == Symmetry::Full) {
    for (int k = 0; k < rect_.width() - 1; ++k) {
      LinkState s;
      s.set(k, Label::Bottom);
      out.push_back(keep(s, 1));
    }
  }
  return out;
}

int StageRules::expand(const Stage& stage, int slots, const LinkState& s, Transition* out) const {
  switch (stage.kind) {
    case StageKind::Start:
      throw IllegalStageOrder("Start takes no incoming states");
    case StageKind::Left:
      return left(slots, s, out);
    case StageKind::Bulk:
      return bulk(stage.column, s, out);
    case StageKind::Centre:
      return centre(stage.column, s, out);
    case StageKind::Right:
      return right(stage.row, slots, s, out);
    case StageKind::Top:
      return top(stage.column, slots, s, out);
  }
  return 0;
}

int StageRules::exit_for(Label boundary, int coord, Transition* out) const {
  out[0].exit = true;
  out[0].shift = 0;
  out[0].exit_index =
      boundary == Label::Side ? layout_.left_right(coord) : layout_.bottom_top(coord);
  return 1;
}

int StageRules::left(int slots, const LinkState& s, Transition* out) const {
  out[0] = keep(s.pushed_front(Label::Empty), 0);
  if (symmetry_ == Symmetry::Full && !s.has_boundary_label(slots)) {
    out[1] = keep(s.pushed_front(Label::Side), 1);
    return 2;
  }
  return 1;
}

int StageRules::bulk(int column, const LinkState& s, Transition* out) const {
  const int w = column - 1;
  const int n = column;
  const Label a = s[w];
  const Label b = s[n];

  if (a == Label::Empty && b == Label::Empty) {
    LinkState t = s;
    t.set(w, Label::Open);
    t.set(n, Label::Close);
    out[0] = keep(s, 0);
    out[1] = keep(t, 2);
    return 2;
  }

  LinkState t = s;
  t.set(w, Label::Empty);
  t.set(n, Label::Empty);

  if (a == Label::Empty || b == Label::Empty) {
    const Label l = a == Label::Empty ? b : a;
    LinkState north = t, east = t;
    north.set(w, l);
    east.set(n, l);
    out[0] = keep(north, 1);
    out[1] = keep(east, 1);
    return 2;
  }

  if (is_link(a) && is_link(b)) {
    if (a == Label::Open && b == Label::Close)
      return 0;  // closed loop
    if (a == Label::Open && b == Label::Open)
      t.set(s.partner(n), Label::Open);
    else if (a == Label::Close && b == Label::Close)
      t.set(s.partner(w), Label::Close);
    out[0] = keep(t, 0);
    return 1;
  }
  if (is_link(a)) {
    t.set(s.partner(w), b);
    out[0] = keep(t, 0);
    return 1;
  }
  if (is_link(b)) {
    t.set(s.partner(n), a);
    out[0] = keep(t, 0);
    return 1;
  }

  // Two strand ends meet: only centre + boundary completes a walk.
  const bool a_centre = a == Label::Centre;
  const bool b_centre = b == Label::Centre;
  if (a_centre == b_centre || t.bits != 0)
    return 0;
  return exit_for(a_centre ? b : a, s.exit_coord, out);
}

int StageRules::centre(int column, const LinkState& s, Transition* out) const {
  const int w = column - 1;
  const int n = column;
  const Label a = s[w];
  const Label b = s[n];

  if (a == Label::Empty && b == Label::Empty) {
    LinkState north = s, east = s;
    north.set(w, Label::Centre);
    east.set(n, Label::Centre);
    out[0] = keep(north, 1);
    out[1] = keep(east, 1);
    return 2;
  }
  if (a != Label::Empty && b != Label::Empty)
    return 0;

  const int k = a != Label::Empty ? w : n;
  const Label l = s[k];
  LinkState t = s;
  t.set(k, Label::Empty);
  if (is_link(l)) {
    t.set(s.partner(k), Label::Centre);
    out[0] = keep(t, 0);
    return 1;
  }
  if (is_boundary(l) && t.bits == 0)
    return exit_for(l, s.exit_coord, out);
  return 0;
}

int StageRules::right(int row, int slots, const LinkState& s, Transition* out) const {
  const int k = slots - 1;
  const Label l = s[k];
  if (l == Label::Empty) {
    out[0] = keep(s.popped_back(slots), 0);
    return 1;
  }
  if (s.has_boundary_label(slots))
    return 0;
  const int cy = row - rect_.centre_row();
  if (mode_ == Mode::FullHitting && cy < 0)
    return 0;
  const int coord = mode_ == Mode::FullHitting ? cy : 0;

  LinkState t = s;
  t.set(k, Label::Empty);
  if (l == Label::Centre) {
    if (t.bits != 0)
      return 0;
    return exit_for(Label::Side, coord, out);
  }
  t.set(s.partner(k), Label::Side);
  t.exit_coord = coord;
  out[0] = keep(t.popped_back(slots), 0);
  return 1;
}

int StageRules::top(int column, int slots, const LinkState& s, Transition* out) const {
  const int k = column - 1;
  const Label l = s[k];
  if (l == Label::Empty) {
    out[0] = keep(s, 0);
    return 1;
  }
  const int cx = column - rect_.centre_column();
  if (mode_ == Mode::FullHitting && cx < 0)
    return 0;
  if (s.has_boundary_label(slots))
    return 0;
  const int coord = mode_ == Mode::FullHitting ? cx : 0;

  LinkState t = s;
  t.set(k, Label::Empty);
  if (l == Label::Centre) {
    if (t.bits != 0)
      return 0;
    return exit_for(Label::Bottom, coord, out);
  }
  t.set(s.partner(k), Label::Bottom);
  t.exit_coord = coord;
  out[0] = keep(t, 0);
  return 1;
}

}  // namespace rectsaw
