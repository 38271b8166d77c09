#pragma once

#include "rectsaw/arith/numbers.hpp"
#include "rectsaw/enumerator/rectangle.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace rectsaw {

/// Integer polynomial in the step fugacity x; coefficient k counts walks of
/// k steps.  Trailing zero coefficients are dropped.
class GenFun {
 public:
  GenFun() = default;
  explicit GenFun(std::vector<BigInt> coeffs);
  static GenFun of(std::initializer_list<long long> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt operator[](int k) const;

  GenFun& operator+=(const GenFun& other);
  GenFun scaled(long factor) const;
  friend GenFun operator+(GenFun a, const GenFun& b) { return a += b; }
  friend bool operator==(const GenFun&, const GenFun&) = default;

  /// "2x^2 + 8x^3 + ..." or "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Walks that first touch the long (left/right) sides and the short
/// (bottom/top) sides, counted over the whole rectangle.
struct BoundarySplit {
  GenFun lr;
  GenFun bt;
  friend bool operator==(const BoundarySplit&, const BoundarySplit&) = default;
};

/// Per exit point counts.  top[c_x] covers the top vertex at column
/// L/2 + c_x, right[c_y] the right vertex at row W/2 + c_y; negative offsets
/// follow by reflection and are not stored.  Each series counts walks to one
/// single boundary vertex.
struct HittingTable {
  std::vector<GenFun> top;
  std::vector<GenFun> right;

  const GenFun& at_top(int cx) const;
  const GenFun& at_right(int cy) const;

  /// Sums over all boundary points of the full rectangle.
  BoundarySplit boundary_split() const;

  friend bool operator==(const HittingTable&, const HittingTable&) = default;
};

}  // namespace rectsaw
