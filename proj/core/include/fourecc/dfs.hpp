#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fourecc/dsu.hpp"
#include "fourecc/graph.hpp"

namespace fourecc {

enum class EdgeKind : std::uint8_t { tree, back };

/// Rooted DFS tree of a connected loop-free multigraph.
///
/// Tree edges are oriented away from the root (tail = parent, head =
/// child), back edges toward it (tail = deeper end, head = its ancestor).
/// A tree edge is identified with its head, so
/// per-tree-edge tables are indexed by vertex. pre/post share one clock and
/// take pairwise distinct values in 1..2n.
class DfsStructure {
 public:
  VertexId root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return pre_.size(); }
  std::size_t edge_count() const noexcept { return kind_.size(); }

  std::uint32_t pre(VertexId v) const { return pre_[v]; }
  std::uint32_t post(VertexId v) const { return post_[v]; }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }
  /// Tree edge into v, kNoEdge for the root.
  EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
  VertexId parent(VertexId v) const { return tree_.parent[v]; }

  EdgeKind kind(EdgeId e) const { return kind_[e]; }
  bool is_tree(EdgeId e) const { return kind_[e] == EdgeKind::tree; }
  VertexId tail(EdgeId e) const { return tail_[e]; }
  VertexId head(EdgeId e) const { return head_[e]; }

  /// Weak ancestor test: a lies on the root path of b.
  bool is_ancestor(VertexId a, VertexId b) const noexcept {
    return pre_[a] <= pre_[b] && post_[b] <= post_[a];
  }
  std::uint32_t subtree_size(VertexId v) const { return (post_[v] - pre_[v] + 1) / 2; }

  /// Vertices in preorder; tree edges in DFS visiting order are the parent
  /// edges of preorder()[1..].
  std::span<const VertexId> preorder() const noexcept { return order_; }
  const RootedTree& tree() const noexcept { return tree_; }

 private:
  friend DfsStructure build_dfs(const Multigraph& g, VertexId root);

  VertexId root_ = 0;
  std::vector<std::uint32_t> pre_, post_, depth_;
  std::vector<EdgeId> parent_edge_;
  std::vector<EdgeKind> kind_;
  std::vector<VertexId> tail_, head_;
  std::vector<VertexId> order_;
  RootedTree tree_;
};

/// Iterative DFS following adjacency (file) order. Throws PreconditionError
/// when g has a self-loop or is disconnected.
DfsStructure build_dfs(const Multigraph& g, VertexId root = 0);

/// True iff back edge `back` has its tail below tree edge `tree` and its head
/// outside that subtree. Throws std::invalid_argument on wrong edge kinds.
bool leaps_over(const DfsStructure& dfs, EdgeId back, EdgeId tree);

/// Extremal back edges leaping over each tree edge, indexed by the tree
/// edge's child vertex (root entries are kNoEdge, as is any missing rank).
///
///  low[i]   : i-th smallest head preorder
///  maxup[i] : i-th largest head preorder
///  mindn[i] : i-th smallest tail preorder
///  maxdn[i] : i-th largest tail preorder
///
/// Ties between back edges with equal keys go to the smaller EdgeId.
struct LowTables {
  std::vector<std::array<EdgeId, 3>> low;
  std::vector<std::array<EdgeId, 2>> maxup;
  std::vector<std::array<EdgeId, 2>> mindn;
  std::vector<std::array<EdgeId, 2>> maxdn;
};

/// low[0..2] only; never throws, entries are kNoEdge for bridges.
std::vector<std::array<EdgeId, 3>> lowest_leaping_edges(const Multigraph& g,
                                                        const DfsStructure& dfs);

/// Full tables. Throws PreconditionError if some tree edge has no leaping
/// back edge (the graph has a bridge).
LowTables compute_low_tables(const Multigraph& g, const DfsStructure& dfs);

/// Lowest common ancestors for a batch of vertex pairs (Tarjan's offline
/// method on the DFS tree).
std::vector<VertexId> lca_offline(const DfsStructure& dfs,
                                  std::span<const std::pair<VertexId, VertexId>> queries);

}  // namespace fourecc
