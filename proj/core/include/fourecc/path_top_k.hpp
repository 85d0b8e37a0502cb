#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fourecc/dsu.hpp"

namespace fourecc {

struct WeightedPath {
  VertexId u;
  VertexId v;
  std::uint32_t weight;
};

/// For every tree edge (identified by its child vertex), up to k indices of
/// the lowest-weight paths that cover it, in non-decreasing weight order.
class TopKCover {
 public:
  TopKCover(std::size_t vertex_count, std::size_t k)
      : k_(k), slots_(vertex_count * k, 0), count_(vertex_count, 0) {}

  std::size_t k() const noexcept { return k_; }
  std::span<const std::uint32_t> paths(VertexId child) const {
    return {slots_.data() + child * k_, count_[child]};
  }
  /// Path index at rank i, or kNoPath when fewer than i+1 paths cover.
  std::uint32_t at(VertexId child, std::size_t i) const {
    return i < count_[child] ? slots_[child * k_ + i] : kNoPath;
  }
  static constexpr std::uint32_t kNoPath = 0xffffffffu;

  /// Total iterations of the climbing loop; bounded by n*k.
  std::size_t loop_iterations = 0;

 private:
  friend class PathTopKSolver;
  std::size_t k_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint8_t> count_;
};

/// Reports, for each tree edge, the k minimum-weight paths among `paths`
/// that contain it, in O(nk + p + C) up to the DSU's inverse-Ackermann
/// factor. Weights must lie in [0, max_weight]; equal weights are ordered by
/// ascending path index. Requires 1 <= k <= 255.
TopKCover top_k_min_paths(const RootedTree& tree, std::span<const WeightedPath> paths,
                          std::size_t k, std::uint32_t max_weight);

/// Same, reusing a precomputed ancestor index of `tree`.
TopKCover top_k_min_paths(const RootedTree& tree, const AncestorIndex& index,
                          std::span<const WeightedPath> paths, std::size_t k,
                          std::uint32_t max_weight);

}  // namespace fourecc
