#include "regcalc/partitions.hpp"

#include "regcalc/error.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

namespace regcalc {

std::string SetPartition::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << (b ? "," : "") << '{';
    for (std::size_t n = 0; n < blocks[b].size(); ++n) os << (n ? "," : "") << blocks[b][n];
    os << '}';
  }
  os << '}';
  return os.str();
}

bool canonical_less(const SetPartition& a, const SetPartition& b) {
  if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
  return a.blocks < b.blocks;
}

std::vector<SetPartition> enumerate_partitions(int i, int cap) {
  if (i < 1) throw DomainError("partitions need a ground set of size >= 1");
  if (i > cap) {
    throw SizeLimit("partitions of [" + std::to_string(i) + "] exceed the cap of " +
                    std::to_string(cap));
  }
  // Restricted growth strings: label[0] = 0, label[n] <= 1 + max(label[0..n)).
  std::vector<SetPartition> out;
  std::vector<int> label(static_cast<std::size_t>(i), 0);
  std::vector<int> running_max(static_cast<std::size_t>(i), 0);
  while (true) {
    SetPartition p;
    p.size = i;
    p.blocks.resize(static_cast<std::size_t>(running_max.back() + 1));
    for (int n = 0; n < i; ++n) p.blocks[static_cast<std::size_t>(label[n])].push_back(n + 1);
    out.push_back(std::move(p));

    int pos = i - 1;
    while (pos > 0 && label[pos] == running_max[pos - 1] + 1) --pos;
    if (pos == 0) break;
    ++label[pos];
    running_max[pos] = std::max(running_max[pos - 1], label[pos]);
    for (int n = pos + 1; n < i; ++n) {
      label[n] = 0;
      running_max[n] = running_max[pos];
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

OrderingFn OrderingFn::canonical() {
  return {"canonical",
          [](std::vector<SetPartition>& parts) {
            std::sort(parts.begin(), parts.end(), canonical_less);
          },
          [](SetPartition& p) {
            for (auto& b : p.blocks) std::sort(b.begin(), b.end());
            std::sort(p.blocks.begin(), p.blocks.end());
          }};
}

OrderingFn OrderingFn::shuffled(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return {"shuffled:" + std::to_string(seed),
          [rng](std::vector<SetPartition>& parts) {
            std::shuffle(parts.begin(), parts.end(), *rng);
          },
          [rng](SetPartition& p) { std::shuffle(p.blocks.begin(), p.blocks.end(), *rng); }};
}

std::uint64_t bell_number(int n) {
  if (n < 0) throw DomainError("bell_number of a negative size");
  // Pascal row for C(m, k) alongside the Bell values.
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> binom{1};
  for (int m = 0; m < n; ++m) {
    std::uint64_t next = 0;
    for (int k = 0; k <= m; ++k) next += binom[static_cast<std::size_t>(k)] * bell[static_cast<std::size_t>(k)];
    bell.push_back(next);
    std::vector<std::uint64_t> row(static_cast<std::size_t>(m + 2), 1);
    for (int k = 1; k <= m; ++k) row[static_cast<std::size_t>(k)] = binom[static_cast<std::size_t>(k - 1)] + binom[static_cast<std::size_t>(k)];
    binom = std::move(row);
  }
  return bell[static_cast<std::size_t>(n)];
}

}  // namespace regcalc
