#pragma once

#include <cstdint>
#include <vector>

namespace rectsaw {

/// Deterministic Miller-Rabin for 32-bit inputs.
bool is_prime(std::uint32_t n);

/// Distinct primes, each below 2^31 so that a sum of two residues fits in a
/// 32-bit cell.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws InvalidArgument on a duplicate, a composite, or a prime >= 2^31.
  explicit PrimeSet(std::vector<std::uint32_t> primes);

  /// The `count` largest primes below 2^31, in decreasing order.
  static PrimeSet below_2_31(int count);

  /// Enough primes to pin down integers below 4 * 3^degree (the number of
  /// walks of length <= degree is bounded by that), plus one spare prime
  /// used to validate the reconstruction.
  static PrimeSet for_degree(int degree);

  const std::vector<std::uint32_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  std::uint32_t operator[](std::size_t k) const { return primes_[k]; }

 private:
  std::vector<std::uint32_t> primes_;
};

/// Number of 31-bit primes whose product exceeds 2 * 4 * 3^degree.
int primes_needed(int degree);

}  // namespace rectsaw
