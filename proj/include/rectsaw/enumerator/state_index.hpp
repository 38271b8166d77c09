#pragma once

#include "rectsaw/enumerator/link_state.hpp"

#include <cstdint>
#include <vector>

namespace rectsaw {

/// Open-addressing index from LinkState to a dense position.  Capacity is a
/// power of two and the table is rebuilt once the load passes 0.7.  Keys
/// live in the caller's vector, so iteration order is insertion order and
/// does not depend on the hash.
class StateIndex {
 public:
  static constexpr std::uint32_t kVacant = 0xffffffffu;

  /// Returns the position of `key` in `keys`, appending it if absent.
  /// `inserted` reports whether the key was new.
  std::uint32_t find_or_insert(const LinkState& key, std::vector<LinkState>& keys,
                               bool& inserted);

  /// Position of `key`, or kVacant.
  std::uint32_t find(const LinkState& key, const std::vector<LinkState>& keys) const;

  void clear();

 private:
  static std::uint64_t hash(const LinkState& key);
  void rebuild(const std::vector<LinkState>& keys, std::size_t capacity);

  std::vector<std::uint32_t> table_;
  std::size_t mask_ = 0;
};

}  // namespace rectsaw
