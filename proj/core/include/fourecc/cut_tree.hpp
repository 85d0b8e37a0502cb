#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fourecc/cuts.hpp"

namespace fourecc {

/// |P(c)| for each cut: the number of vertices on the side not containing
/// the DFS root. Constant time per cut from the subtree sizes.
std::vector<std::uint32_t> part_sizes(const DfsStructure& dfs, std::span<const Cut3> cuts);

/// Rooted tree H whose edges are in bijection with the 3-edge cuts of a
/// 3-edge-connected graph. Node 0 is the root, psi(dfs root) == 0.
///
/// Removing the edge above node `cut_node[c]` splits H so that the graph
/// vertices mapped below it are exactly the side P(c) of cut c.
struct CutTree {
  std::vector<std::uint32_t> parent;     // per node; kNoNode at the root
  std::vector<std::uint32_t> node_cut;   // per node: cut owning its parent edge
  std::vector<std::uint32_t> cut_node;   // phi: cut index -> child node of its edge
  std::vector<std::uint32_t> psi;        // graph vertex -> node
  std::vector<std::uint32_t> part_size;  // per cut
  /// Per cut: number of path insertions that walked its edge (at most 3,
  /// one per member edge).
  std::vector<std::uint8_t> visits;

  static constexpr std::uint32_t kNoNode = 0xffffffffu;
  std::size_t node_count() const noexcept { return parent.size(); }
};

/// Reconstructs H from the complete list of 3-edge cuts. Throws
/// PreconditionError when the list is not consistent with a cut tree (an
/// incomplete or wrong CutSet).
CutTree build_cut_tree(const Multigraph& g, const DfsStructure& dfs, std::span<const Cut3> cuts,
                       std::span<const std::uint32_t> sizes);

/// Convenience: part sizes plus reconstruction.
CutTree build_cut_tree(const Multigraph& g, const DfsStructure& dfs, std::span<const Cut3> cuts);

/// Nonempty psi-fibers as a canonical labeling.
Labeling four_ecc_from_tree(const CutTree& tree);

/// {"root":0,"nodes":[{"id":..,"parent":..,"vertices":[..]}...],
///  "edges":[{"parent":..,"child":..,"cut":[a,b,c],"part_size":..}...]}
std::string cut_tree_to_json(const CutTree& tree, std::span<const Cut3> cuts);
std::string cut_tree_to_dot(const CutTree& tree, std::span<const Cut3> cuts);

}  // namespace fourecc
