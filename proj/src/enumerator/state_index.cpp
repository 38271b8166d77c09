#include "rectsaw/enumerator/state_index.hpp"

namespace rectsaw {

std::uint64_t StateIndex::hash(const LinkState& key) {
  std::uint64_t z = key.bits ^ (std::uint64_t{static_cast<std::uint32_t>(key.exit_coord)} * 0xd6e8feb86659fd93ull);
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void StateIndex::clear() {
  table_.clear();
  mask_ = 0;
}

void StateIndex::rebuild(const std::vector<LinkState>& keys, std::size_t capacity) {
  table_.assign(capacity, kVacant);
  mask_ = capacity - 1;
  for (std::uint32_t n = 0; n < keys.size(); ++n) {
    std::size_t h = hash(keys[n]) & mask_;
    while (table_[h] != kVacant)
      h = (h + 1) & mask_;
    table_[h] = n;
  }
}

std::uint32_t StateIndex::find(const LinkState& key, const std::vector<LinkState>& keys) const {
  if (table_.empty())
    return kVacant;
  std::size_t h = hash(key) & mask_;
  while (table_[h] != kVacant) {
    if (keys[table_[h]] == key)
      return table_[h];
    h = (h + 1) & mask_;
  }
  return kVacant;
}

std::uint32_t StateIndex::find_or_insert(const LinkState& key, std::vector<LinkState>& keys,
                                         bool& inserted) {
  if (table_.empty())
    rebuild(keys, 64);
  std::size_t h = hash(key) & mask_;
  while (table_[h] != kVacant) {
    if (keys[table_[h]] == key) {
      inserted = false;
      return table_[h];
    }
    h = (h + 1) & mask_;
  }
  const auto n = static_cast<std::uint32_t>(keys.size());
  keys.push_back(key);
  table_[h] = n;
  inserted = true;
  if (10 * keys.size() > 7 * table_.size())
    rebuild(keys, table_.size() * 2);
  return n;
}

}  // namespace rectsaw
