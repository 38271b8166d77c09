#include "rectsaw/enumerator/brute_force.hpp"

#include "rectsaw/common/error.hpp"

#include <cstdint>
#include <vector>

namespace rectsaw {

namespace {

using Counts = std::vector<std::vector<std::uint64_t>>;

struct Walker {
  explicit Walker(const Rectangle& rect)
      : L(rect.width()),
        W(rect.height()),
        visited((L + 1) * (W + 1), false),
        top(L + 1, std::vector<std::uint64_t>(rect.max_degree() + 1, 0)),
        bottom(top),
        left(W + 1, std::vector<std::uint64_t>(rect.max_degree() + 1, 0)),
        right(left) {}

  int at(int i, int j) const { return j * (L + 1) + i; }

  void run() {
    visited[at(L / 2, W / 2)] = true;
    step(L / 2, W / 2, 0);
  }

  void step(int i, int j, int length) {
    static const int di[4] = {1, -1, 0, 0};
    static const int dj[4] = {0, 0, 1, -1};
    const int len = length + 1;
    for (int d = 0; d < 4; ++d) {
      const int ni = i + di[d], nj = j + dj[d];
      if (ni == L) {
        ++right[nj][len];
      } else if (ni == 0) {
        ++left[nj][len];
      } else if (nj == W) {
        ++top[ni][len];
      } else if (nj == 0) {
        ++bottom[ni][len];
      } else if (!visited[at(ni, nj)]) {
        visited[at(ni, nj)] = true;
        step(ni, nj, len);
        visited[at(ni, nj)] = false;
      }
    }
  }

  int L, W;
  std::vector<bool> visited;
  Counts top, bottom, left, right;  // indexed by column or row
};

GenFun to_genfun(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (std::uint64_t v : counts)
    c.emplace_back(v);
  return GenFun(std::move(c));
}

GenFun total(const Counts& rows) {
  GenFun g;
  for (const auto& r : rows)
    g += to_genfun(r);
  return g;
}

}  // namespace

BruteForceResult brute_force_enumerate(const Rectangle& rect, int vertex_cap) {
  if (rect.interior_vertices() > vertex_cap)
    throw ResourceLimitExceeded("brute force limited to " + std::to_string(vertex_cap) +
                                " interior vertices, " + rect.label() + " has " +
                                std::to_string(rect.interior_vertices()));
  Walker w(rect);
  w.run();

  BruteForceResult out;
  out.split.lr = total(w.right) + total(w.left);
  out.split.bt = total(w.top) + total(w.bottom);
  for (int cx = 0; cx < rect.width() / 2; ++cx)
    out.table.top.push_back(to_genfun(w.top[rect.centre_column() + cx]));
  for (int cy = 0; cy < rect.height() / 2; ++cy)
    out.table.right.push_back(to_genfun(w.right[rect.centre_row() + cy]));
  return out;
}

}  // namespace rectsaw
