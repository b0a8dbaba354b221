#pragma once

// Visited-set for the pair BFS: maps a packed (a, b) pair to its BFS index.
// Dense storage when |G||H| is small enough, open addressing otherwise.

#include <cstdint>
#include <vector>

#include "chirality_lab/cayley_table.hpp"

namespace chirality_lab::detail {

inline constexpr std::uint64_t kDensePairLimit = std::uint64_t{1} << 26;

class DensePairIndex {
 public:
  DensePairIndex(std::uint64_t left_size, std::uint64_t right_size)
      : right_size_(right_size), slots_(left_size * right_size, CayleyTable::kNone) {}

  // Returns the stored index, or inserts `fresh` and returns kNone.
  Index find_or_insert(Index a, Index b, Index fresh) {
    Index& slot = slots_[std::uint64_t{a} * right_size_ + b];
    if (slot != CayleyTable::kNone) return slot;
    slot = fresh;
    return CayleyTable::kNone;
  }

 private:
  std::uint64_t right_size_;
  std::vector<Index> slots_;
};

class HashedPairIndex {
 public:
  HashedPairIndex() : keys_(1u << 16, kEmpty), values_(1u << 16) {}

  Index find_or_insert(Index a, Index b, Index fresh) {
    if ((count_ + 1) * 2 > keys_.size()) grow();
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    for (std::size_t i = probe_start(key);; i = (i + 1) & (keys_.size() - 1)) {
      if (keys_[i] == key) return values_[i];
      if (keys_[i] == kEmpty) {
        keys_[i] = key;
        values_[i] = fresh;
        ++count_;
        return CayleyTable::kNone;
      }
    }
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  std::size_t probe_start(std::uint64_t key) const {
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdull;
    key ^= key >> 33;
    return static_cast<std::size_t>(key) & (keys_.size() - 1);
  }

  void grow() {
    std::vector<std::uint64_t> old_keys(keys_.size() * 2, kEmpty);
    std::vector<Index> old_values(values_.size() * 2);
    old_keys.swap(keys_);
    old_values.swap(values_);
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == kEmpty) continue;
      std::size_t j = probe_start(old_keys[i]);
      while (keys_[j] != kEmpty) j = (j + 1) & (keys_.size() - 1);
      keys_[j] = old_keys[i];
      values_[j] = old_values[i];
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<Index> values_;
  std::size_t count_ = 0;
};

}  // namespace chirality_lab::detail
