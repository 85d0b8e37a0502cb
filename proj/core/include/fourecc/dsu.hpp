#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fourecc/graph.hpp"

namespace fourecc {

/// A rooted tree on vertices 0..size-1 given by parent links.
/// parent[root] == kNoVertex.
struct RootedTree {
  std::vector<VertexId> parent;
  VertexId root = 0;

  std::size_t size() const noexcept { return parent.size(); }
  bool is_edge(VertexId a, VertexId b) const {
    return (a != root && parent[a] == b) || (b != root && parent[b] == a);
  }
};

/// Pre/post bracketing of a RootedTree for O(1) ancestor tests.
class AncestorIndex {
 public:
  explicit AncestorIndex(const RootedTree& tree);

  /// True iff a is a (weak) ancestor of b.
  bool is_ancestor(VertexId a, VertexId b) const noexcept {
    return pre_[a] <= pre_[b] && post_[b] <= post_[a];
  }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }
  /// Vertices in preorder.
  std::span<const VertexId> preorder() const noexcept { return order_; }

 private:
  std::vector<std::uint32_t> pre_;
  std::vector<std::uint32_t> post_;
  std::vector<std::uint32_t> depth_;
  std::vector<VertexId> order_;
};

/// Disjoint-set union whose merges are restricted to edges of a fixed rooted
/// union tree. Every live set is then a connected subtree, so it has a unique
/// shallowest member, reported by lowest().
///
/// Union by size with path compression.
class UnionTreeDsu {
 public:
  explicit UnionTreeDsu(const RootedTree& tree);

  std::size_t size() const noexcept { return link_.size(); }

  /// Merges the sets of x and y. xy must be an edge of the union tree;
  /// throws std::invalid_argument otherwise. No-op if already merged.
  void unite(VertexId x, VertexId y);

  VertexId find(VertexId x);
  /// Shallowest vertex of x's set.
  VertexId lowest(VertexId x) { return top_[find(x)]; }

 private:
  const RootedTree* tree_;
  std::vector<VertexId> link_;
  std::vector<std::uint32_t> size_;
  std::vector<VertexId> top_;
};

}  // namespace fourecc
