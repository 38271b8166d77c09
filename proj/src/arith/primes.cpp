#include "rectsaw/arith/primes.hpp"

#include "rectsaw/common/error.hpp"

#include <cmath>
#include <set>
#include <string>

namespace rectsaw {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1)
      r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2)
    return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    if (n % p == 0)
      return n == p;
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 7, 61 are enough below 4,759,123,141.
  for (std::uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0)
      continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

PrimeSet::PrimeSet(std::vector<std::uint32_t> primes) : primes_(std::move(primes)) {
  std::set<std::uint32_t> seen;
  for (std::uint32_t p : primes_) {
    if (p >= (1u << 31))
      throw InvalidArgument("modulus " + std::to_string(p) + " is not below 2^31");
    if (!is_prime(p))
      throw InvalidArgument(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second)
      throw InvalidArgument("prime " + std::to_string(p) + " listed twice");
  }
}

PrimeSet PrimeSet::below_2_31(int count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = (1u << 31) - 1; static_cast<int>(out.size()) < count; n -= 2)
    if (is_prime(n))
      out.push_back(n);
  return PrimeSet(std::move(out));
}

int primes_needed(int degree) {
  // log2(2 * 4 * 3^degree); each prime contributes just under 31 bits.
  const double bits = 3.0 + degree * std::log2(3.0);
  return static_cast<int>(std::ceil(bits / 30.99));
}

PrimeSet PrimeSet::for_degree(int degree) { return below_2_31(primes_needed(degree) + 1); }

}  // namespace rectsaw
