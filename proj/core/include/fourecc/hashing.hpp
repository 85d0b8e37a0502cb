#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fourecc/dfs.hpp"

namespace fourecc {

/// splitmix64: a seeded full-period 64-bit mixer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// 64-bit xor-hashes: uniform random words on back edges, and on each tree
/// edge the xor of the words of all back edges leaping over it. A set of
/// edges whose removal disconnects the graph always xors to zero; the
/// converse fails only on a hash collision.
struct CompressedHashes {
  std::vector<std::uint64_t> ch;
  std::uint64_t seed = 0;
  static constexpr unsigned kBits = 64;
};

CompressedHashes assign_compressed_hashes(const Multigraph& g, const DfsStructure& dfs,
                                          std::uint64_t seed);

struct KeyedEdge {
  std::uint64_t key;
  EdgeId edge;
};

/// Stable LSD radix sort on the full 64-bit key, 8 passes of 8 bits.
void radix_sort(std::vector<KeyedEdge>& records);

/// Answers "which edge has hash q?" for a batch of queries by sorting
/// queries and keys together. Each answer is the smallest EdgeId whose key
/// equals the query, or kNoEdge.
std::vector<EdgeId> offline_membership(std::span<const std::uint64_t> queries,
                                       std::span<const KeyedEdge> keys);

}  // namespace fourecc
