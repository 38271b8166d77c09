#include "rectsaw/enumerator/enumerate.hpp"

#include "rectsaw/enumerator/rings.hpp"

namespace rectsaw {

namespace {

std::vector<GenFun> series_from_cells(const std::vector<BigInt>& cells, int count, int width) {
  std::vector<GenFun> out;
  out.reserve(count);
  for (int e = 0; e < count; ++e)
    out.emplace_back(std::vector<BigInt>(cells.begin() + e * width, cells.begin() + (e + 1) * width));
  return out;
}

}  // namespace

BoundarySplit split_from_exits(std::vector<GenFun> raw, Symmetry symmetry) {
  if (raw.size() != 2)
    throw InvalidArgument("split exit table must have two entries");
  const long factor = symmetry == Symmetry::Reduced ? 2 : 1;
  return {raw[0].scaled(factor), raw[1].scaled(factor)};
}

HittingTable table_from_exits(const Rectangle& rect, std::vector<GenFun> raw) {
  const auto rows = static_cast<std::size_t>(rect.height() / 2);
  if (raw.size() != rows + rect.width() / 2)
    throw InvalidArgument("full-hitting exit table has the wrong size");
  HittingTable t;
  t.right.assign(raw.begin(), raw.begin() + rows);
  t.top.assign(raw.begin() + rows, raw.end());
  return t;
}

BoundarySplit enumerate_boundary_split(const Rectangle& rect, const EnumOptions& options) {
  BigIntRing ring(rect.max_degree());
  TransferMatrix<BigIntRing> tm(rect, Mode::Split, options.symmetry, ring, options.state_cap);
  auto cells = tm.run();
  return split_from_exits(series_from_cells(cells, 2, ring.width()), options.symmetry);
}

HittingTable enumerate_full_hitting(const Rectangle& rect, const EnumOptions& options) {
  BigIntRing ring(rect.max_degree());
  TransferMatrix<BigIntRing> tm(rect, Mode::FullHitting, Symmetry::Reduced, ring,
                                options.state_cap);
  auto cells = tm.run();
  const int count = tm.rules().layout().size();
  return table_from_exits(rect, series_from_cells(cells, count, ring.width()));
}

StateStats state_count_stats(const Rectangle& rect, Mode mode, Symmetry symmetry,
                             std::size_t state_cap) {
  TransferMatrix<NullRing> tm(rect, mode, symmetry, NullRing{}, state_cap);
  tm.run();
  return tm.stats();
}

template <class Real>
PointSplit<Real> evaluate_boundary_split(const Rectangle& rect, const Real& x,
                                         std::size_t state_cap) {
  TransferMatrix<PointRing<Real>> tm(rect, Mode::Split, Symmetry::Reduced, PointRing<Real>(x),
                                     state_cap);
  auto cells = tm.run();
  return {Real(2 * cells[0]), Real(2 * cells[1])};
}

template <class Real>
PointHitting<Real> evaluate_full_hitting(const Rectangle& rect, const Real& x,
                                         std::size_t state_cap) {
  TransferMatrix<PointRing<Real>> tm(rect, Mode::FullHitting, Symmetry::Reduced,
                                     PointRing<Real>(x), state_cap);
  auto cells = tm.run();
  const auto rows = static_cast<std::size_t>(rect.height() / 2);
  PointHitting<Real> out;
  out.right.assign(cells.begin(), cells.begin() + rows);
  out.top.assign(cells.begin() + rows, cells.end());
  return out;
}

template PointSplit<double> evaluate_boundary_split(const Rectangle&, const double&, std::size_t);
template PointSplit<BigFloat> evaluate_boundary_split(const Rectangle&, const BigFloat&,
                                                      std::size_t);
template PointHitting<double> evaluate_full_hitting(const Rectangle&, const double&, std::size_t);
template PointHitting<BigFloat> evaluate_full_hitting(const Rectangle&, const BigFloat&,
                                                      std::size_t);

}  // namespace rectsaw
