#pragma once

#include "rectsaw/common/error.hpp"
#include "rectsaw/enumerator/rules.hpp"
#include "rectsaw/enumerator/state_index.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace rectsaw {

inline constexpr std::size_t kDefaultStateCap = 200'000'000;

/// Link states with their weights, after `step` stages of the schedule.
/// Weights are stored flat: state n owns cells [n*width, (n+1)*width).
/// `exits` holds the weights of walks that have already terminated.
template <class Ring>
struct Ensemble {
  using Cell = typename Ring::Cell;

  std::size_t step = 0;
  int slots = 0;
  std::vector<LinkState> keys;
  std::vector<Cell> weights;
  std::vector<Cell> exits;
  StateIndex index;

  std::size_t size() const { return keys.size(); }
};

struct StateStats {
  std::size_t max_states_pre_centre = 0;
  std::size_t max_states_post_centre = 0;
};

template <class Ring>
class TransferMatrix {
 public:
  using Cell = typename Ring::Cell;

  TransferMatrix(const Rectangle& rect, Mode mode, Symmetry symmetry, Ring ring,
                 std::size_t state_cap = kDefaultStateCap)
      : rules_(rect, mode, symmetry), schedule_(rect), ring_(std::move(ring)), cap_(state_cap) {}

  const StageRules& rules() const { return rules_; }
  const Schedule& schedule() const { return schedule_; }
  const Ring& ring() const { return ring_; }

  /// The empty ensemble that Start expects.
  Ensemble<Ring> initial() const {
    Ensemble<Ring> e;
    e.exits.assign(static_cast<std::size_t>(rules_.layout().size()) * ring_.width(), Cell());
    return e;
  }

  /// Applies `stage` to `in`, writing the result to `out` (whose storage is
  /// reused).  The stage must be the next one in the schedule and `in` must
  /// carry the slot count that stage expects.
  void apply(const Stage& stage, const Ensemble<Ring>& in, Ensemble<Ring>& out) const {
    if (in.step >= schedule_.size() || !(schedule_.at(in.step) == stage))
      throw IllegalStageOrder("stage " + stage.to_string() + " is not legal after " +
                              std::to_string(in.step) + " stages");
    if (in.slots != schedule_.slots_before(in.step))
      throw InvalidState("ensemble has " + std::to_string(in.slots) + " slots, stage " +
                         stage.to_string() + " needs " +
                         std::to_string(schedule_.slots_before(in.step)));

    const int width = ring_.width();
    out.step = in.step + 1;
    out.slots = slots_after(stage, in.slots);
    out.keys.clear();
    out.weights.clear();
    out.index.clear();
    out.exits = in.exits;

    if (stage.kind == StageKind::Start) {
      std::vector<Cell> unit(width);
      for (const Transition& t : rules_.start()) {
        ring_.set_unit(unit.data(), t.shift);
        accumulate(out, t.state, unit.data(), 0);
      }
      return;
    }

    Transition buf[2];
    for (std::size_t n = 0; n < in.keys.size(); ++n) {
      const int count = rules_.expand(stage, in.slots, in.keys[n], buf);
      const Cell* w = in.weights.data() + n * width;
      for (int c = 0; c < count; ++c) {
        if (buf[c].exit)
          ring_.add_shifted(out.exits.data() + static_cast<std::size_t>(buf[c].exit_index) * width,
                            w, buf[c].shift);
        else
          accumulate(out, buf[c].state, w, buf[c].shift);
      }
    }
  }

  Ensemble<Ring> apply(const Stage& stage, const Ensemble<Ring>& in) const {
    Ensemble<Ring> out;
    apply(stage, in, out);
    return out;
  }

  /// Runs the whole schedule and returns the exit table.
  std::vector<Cell> run() {
    Ensemble<Ring> cur = initial();
    Ensemble<Ring> next;
    bool centre_done = false;
    stats_ = StateStats{};
    for (std::size_t step = 0; step < schedule_.size(); ++step) {
      const Stage stage = schedule_.at(step);
      apply(stage, cur, next);
      std::swap(cur, next);
      if (stage.kind == StageKind::Centre)
        centre_done = true;
      std::size_t& peak =
          centre_done ? stats_.max_states_post_centre : stats_.max_states_pre_centre;
      peak = std::max(peak, cur.size());
    }
    return std::move(cur.exits);
  }

  const StateStats& stats() const { return stats_; }

 private:
  int slots_after(const Stage& stage, int slots) const {
    switch (stage.kind) {
      case StageKind::Start: return rules_.rectangle().width() - 1;
      case StageKind::Left: return slots + 1;
      case StageKind::Right: return slots - 1;
      default: return slots;
    }
  }

  void accumulate(Ensemble<Ring>& out, const LinkState& key, const Cell* w, int shift) const {
    bool inserted = false;
    const std::uint32_t n = out.index.find_or_insert(key, out.keys, inserted);
    const int width = ring_.width();
    if (inserted) {
      if (out.keys.size() > cap_)
        throw ResourceLimitExceeded("state count exceeded the cap of " + std::to_string(cap_));
      out.weights.resize(out.keys.size() * width);
    }
    ring_.add_shifted(out.weights.data() + static_cast<std::size_t>(n) * width, w, shift);
  }

  StageRules rules_;
  Schedule schedule_;
  Ring ring_;
  std::size_t cap_;
  StateStats stats_;
};

}  // namespace rectsaw
