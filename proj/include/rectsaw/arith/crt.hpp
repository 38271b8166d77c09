#pragma once

#include "rectsaw/arith/numbers.hpp"
#include "rectsaw/arith/primes.hpp"

#include <cstdint>
#include <vector>

namespace rectsaw {

/// Residues of one integer table (any shape, flattened) modulo one prime.
struct ResidueTable {
  std::uint32_t prime = 0;
  std::vector<std::uint32_t> cells;
};

/// Incremental CRT: each value is the unique integer in [0, prod p) with the
/// given residues.  All tables must have the same length.  The last table
/// is held back as a check: every reconstructed value must reduce to its
/// residue there, otherwise InconsistentResidues is thrown.  With
/// `verify == false` all tables are used and nothing is checked.
std::vector<BigInt> crt_reconstruct(const std::vector<ResidueTable>& tables, bool verify = true);

/// Single-value form: residues[k] mod primes[k].
BigInt crt_combine(const std::vector<std::uint32_t>& residues,
                   const std::vector<std::uint32_t>& moduli);

/// Product of the primes that took part in a reconstruction.
BigInt modulus_product(const std::vector<std::uint32_t>& primes);

}  // namespace rectsaw
