#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace regcalc {

using Block = std::vector<int>;

/// A set partition of {1, ..., size}. Blocks are sorted ascending and listed
/// by least element unless an OrderingFn rearranged them.
struct SetPartition {
  int size = 0;
  std::vector<Block> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  std::string str() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Canonical comparison: fewer blocks first, then the block lists compared
/// lexicographically.
bool canonical_less(const SetPartition& a, const SetPartition& b);

inline constexpr int kDefaultPartitionCap = 12;

/// All partitions of {1, ..., i} in canonical order. Throws SizeLimit when
/// i exceeds `cap`, DomainError when i < 1.
std::vector<SetPartition> enumerate_partitions(int i, int cap = kDefaultPartitionCap);

/// Arranges the partitions of [i] and the blocks inside each partition.
/// The folds of the composition calculus run over these arrangements from
/// last (max) to first (min).
struct OrderingFn {
  std::string name;
  std::function<void(std::vector<SetPartition>&)> arrange_partitions;
  std::function<void(SetPartition&)> arrange_blocks;

  static OrderingFn canonical();
  // A reproducible random arrangement of both levels.
  static OrderingFn shuffled(std::uint64_t seed);
};

// Bell numbers by the recurrence B(n+1) = sum_k C(n,k) B(k).
std::uint64_t bell_number(int n);

}  // namespace regcalc
