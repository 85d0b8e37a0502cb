#include "fourecc/hashing.hpp"

#include <array>

namespace fourecc {

CompressedHashes assign_compressed_hashes(const Multigraph& g, const DfsStructure& dfs,
                                          std::uint64_t seed) {
  CompressedHashes h;
  h.seed = seed;
  h.ch.assign(g.edge_count(), 0);
  SplitMix64 rng(seed);
  // Per vertex: xor of incident back-edge words. Summed over a subtree the
  // internal back edges cancel, leaving exactly the leaping ones.
  std::vector<std::uint64_t> acc(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (dfs.is_tree(e)) continue;
    h.ch[e] = rng.next();
    acc[dfs.tail(e)] ^= h.ch[e];
    acc[dfs.head(e)] ^= h.ch[e];
  }
  const auto order = dfs.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (v == dfs.root()) continue;
    h.ch[dfs.parent_edge(v)] = acc[v];
    acc[dfs.parent(v)] ^= acc[v];
  }
  return h;
}

void radix_sort(std::vector<KeyedEdge>& records) {
  std::vector<KeyedEdge> buffer(records.size());
  for (unsigned shift = 0; shift < 64; shift += 8) {
    std::array<std::size_t, 257> count{};
    for (const auto& r : records) ++count[((r.key >> shift) & 0xff) + 1];
    for (std::size_t d = 1; d < count.size(); ++d) count[d] += count[d - 1];
    for (const auto& r : records) buffer[count[(r.key >> shift) & 0xff]++] = r;
    records.swap(buffer);
  }
}

std::vector<EdgeId> offline_membership(std::span<const std::uint64_t> queries,
                                       std::span<const KeyedEdge> keys) {
  // Keys carry their EdgeId; queries are tagged kQueryBit | index.
  constexpr EdgeId kQueryBit = 0x80000000u;
  std::vector<KeyedEdge> all;
  all.reserve(keys.size() + queries.size());
  all.insert(all.end(), keys.begin(), keys.end());
  for (std::uint32_t i = 0; i < queries.size(); ++i) all.push_back({queries[i], kQueryBit | i});
  radix_sort(all);

  std::vector<EdgeId> answer(queries.size(), kNoEdge);
  for (std::size_t lo = 0; lo < all.size();) {
    std::size_t hi = lo;
    EdgeId best = kNoEdge;
    while (hi < all.size() && all[hi].key == all[lo].key) {
      if (!(all[hi].edge & kQueryBit) && all[hi].edge < best) best = all[hi].edge;
      ++hi;
    }
    for (std::size_t j = lo; j < hi; ++j) {
      if (all[j].edge & kQueryBit) answer[all[j].edge & ~kQueryBit] = best;
    }
    lo = hi;
  }
  return answer;
}

}  // namespace fourecc
