#pragma once

#include "rectsaw/enumerator/genfun.hpp"

namespace rectsaw {

inline constexpr int kBruteForceVertexCap = 35;

struct BruteForceResult {
  BoundarySplit split;
  HittingTable table;
};

/// Depth-first search over every walk from the centre, stopping on the first
/// boundary vertex.  Independent of the transfer matrix; used to check it.
/// Throws ResourceLimitExceeded when the rectangle has more than
/// `vertex_cap` interior vertices.
BruteForceResult brute_force_enumerate(const Rectangle& rect,
                                       int vertex_cap = kBruteForceVertexCap);

}  // namespace rectsaw
