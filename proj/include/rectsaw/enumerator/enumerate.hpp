#pragma once

#include "rectsaw/enumerator/genfun.hpp"
#include "rectsaw/enumerator/transfer_matrix.hpp"

#include <cstddef>
#include <vector>

namespace rectsaw {

struct EnumOptions {
  std::size_t state_cap = kDefaultStateCap;
  Symmetry symmetry = Symmetry::Reduced;  // split mode only
};

/// Turns raw exit-table series (one per ExitLayout entry) into the
/// whole-rectangle split, undoing the reflection reduction.
BoundarySplit split_from_exits(std::vector<GenFun> raw, Symmetry symmetry);
HittingTable table_from_exits(const Rectangle& rect, std::vector<GenFun> raw);

/// Exact generating functions from the big-integer engine.
BoundarySplit enumerate_boundary_split(const Rectangle& rect, const EnumOptions& options = {});
HittingTable enumerate_full_hitting(const Rectangle& rect, const EnumOptions& options = {});

/// Peak ensemble sizes before and after the Centre stage.
StateStats state_count_stats(const Rectangle& rect, Mode mode, Symmetry symmetry,
                             std::size_t state_cap = kDefaultStateCap);

template <class Real>
struct PointSplit {
  Real lr;
  Real bt;
};

template <class Real>
struct PointHitting {
  std::vector<Real> top;
  std::vector<Real> right;
};

/// The same quantities with every weight evaluated at x during the sweep.
/// Much lighter than carrying polynomials; used for rectangles whose exact
/// runs are out of reach.  Instantiated for double and BigFloat.
template <class Real>
PointSplit<Real> evaluate_boundary_split(const Rectangle& rect, const Real& x,
                                         std::size_t state_cap = kDefaultStateCap);
template <class Real>
PointHitting<Real> evaluate_full_hitting(const Rectangle& rect, const Real& x,
                                         std::size_t state_cap = kDefaultStateCap);

}  // namespace rectsaw
