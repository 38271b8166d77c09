#pragma once

#include "rectsaw/arith/crt.hpp"
#include "rectsaw/enumerator/enumerate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rectsaw {

/// Exit-table series for one prime: one row of max_degree+1 residues per
/// ExitLayout entry, before any symmetry multiplicity is applied.
struct ModularResult {
  std::uint32_t prime = 0;
  int degree = 0;
  std::vector<std::vector<std::uint32_t>> series;
};

/// One transfer-matrix sweep with coefficients mod p.
ModularResult modular_pass(const Rectangle& rect, Mode mode, std::uint32_t prime,
                           std::size_t state_cap = kDefaultStateCap);

/// Split-mode residues with the reflection factor applied (whole rectangle).
struct ModularSplit {
  std::vector<std::uint32_t> lr;
  std::vector<std::uint32_t> bt;
};
ModularSplit modular_boundary_split(const Rectangle& rect, std::uint32_t prime,
                                    std::size_t state_cap = kDefaultStateCap);

struct ExactOptions {
  PrimeSet primes;  // empty: PrimeSet::for_degree
  int threads = 1;
  std::size_t state_cap = kDefaultStateCap;
  std::string checkpoint_dir;  // empty: no checkpoints
};

/// Raw exit series reconstructed from modular passes; the last prime of the
/// set validates the others.
std::vector<GenFun> exact_exit_series(const Rectangle& rect, Mode mode,
                                      const ExactOptions& options = {});

BoundarySplit exact_boundary_split(const Rectangle& rect, const ExactOptions& options = {});
HittingTable exact_full_hitting(const Rectangle& rect, const ExactOptions& options = {});

}  // namespace rectsaw
