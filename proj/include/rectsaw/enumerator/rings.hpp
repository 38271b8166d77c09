#pragma once

#include "rectsaw/arith/numbers.hpp"
#include "rectsaw/common/error.hpp"

#include <array>
#include <cstdint>

namespace rectsaw {

// Weight rings for the transfer matrix.  A weight is `width()` consecutive
// cells; the only operation the engine needs is dst += x^shift * src.

/// Polynomials in x with coefficients mod p, truncated above `degree`.
struct ModularRing {
  using Cell = std::uint32_t;
  static constexpr std::uint32_t kMaxPrime = 0x7fffffffu;

  ModularRing(std::uint32_t prime, int degree) : p(prime), max_degree(degree) {
    if (prime < 2 || prime > kMaxPrime)
      throw InvalidArgument("modulus " + std::to_string(prime) +
                            " is not below 2^31; cell sums would overflow");
  }

  int width() const { return max_degree + 1; }
  void set_unit(Cell* w, int shift) const {
    for (int k = 0; k < width(); ++k)
      w[k] = 0;
    if (shift <= max_degree)
      w[shift] = 1 % p;
  }
  void add_shifted(Cell* dst, const Cell* src, int shift) const {
    for (int k = 0; k + shift <= max_degree; ++k) {
      std::uint32_t v = dst[k + shift] + src[k];
      dst[k + shift] = v >= p ? v - p : v;
    }
  }

  std::uint32_t p;
  int max_degree;
};

/// Polynomials with arbitrary-precision integer coefficients.
struct BigIntRing {
  using Cell = BigInt;

  explicit BigIntRing(int degree) : max_degree(degree) {}

  int width() const { return max_degree + 1; }
  void set_unit(Cell* w, int shift) const {
    for (int k = 0; k < width(); ++k)
      w[k] = 0;
    if (shift <= max_degree)
      w[shift] = 1;
  }
  void add_shifted(Cell* dst, const Cell* src, int shift) const {
    for (int k = 0; k + shift <= max_degree; ++k)
      if (!src[k].is_zero())
        dst[k + shift] += src[k];
  }

  int max_degree;
};

/// Weights evaluated at a fixed x.
template <class Real>
struct PointRing {
  using Cell = Real;

  explicit PointRing(const Real& x) : powers{Real(1), x, x * x} {}

  int width() const { return 1; }
  void set_unit(Cell* w, int shift) const { w[0] = powers[shift]; }
  void add_shifted(Cell* dst, const Cell* src, int shift) const {
    if (shift == 0)
      dst[0] += src[0];
    else
      dst[0] += src[0] * powers[shift];
  }

  std::array<Real, 3> powers;
};

/// No weights at all; used to count states.
struct NullRing {
  using Cell = char;
  int width() const { return 0; }
  void set_unit(Cell*, int) const {}
  void add_shifted(Cell*, const Cell*, int) const {}
};

}  // namespace rectsaw
