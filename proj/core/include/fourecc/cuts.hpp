#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "fourecc/dfs.hpp"
#include "fourecc/hashing.hpp"

namespace fourecc {

/// Three distinct edges, stored ascending.
struct Cut3 {
  std::array<EdgeId, 3> edges{};

  static Cut3 of(EdgeId a, EdgeId b, EdgeId c) {
    Cut3 cut{{a, b, c}};
    std::sort(cut.edges.begin(), cut.edges.end());
    return cut;
  }
  bool contains(EdgeId e) const noexcept {
    return edges[0] == e || edges[1] == e || edges[2] == e;
  }
  friend auto operator<=>(const Cut3&, const Cut3&) = default;
};

/// Sorted, duplicate-free.
using CutSet = std::vector<Cut3>;

void canonicalize(CutSet& cuts);

enum class CutMode { deterministic, randomized };

struct EnumerateOptions {
  CutMode mode = CutMode::deterministic;
  std::uint64_t seed = 0xC0FFEE;
  /// Check every candidate with verify_cut and drop failures.
  bool paranoid = false;
};

/// How a cut was discovered relative to the DFS tree of its level.
enum class CutCase : std::uint8_t { one_tree_edge, two_tree_lower, two_tree_upper };

struct FoundCut {
  Cut3 cut;  // original EdgeIds
  CutCase kind;
  std::uint32_t level;
};

struct LevelStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t one_tree_edge = 0;
  std::size_t two_tree_lower = 0;
  std::size_t two_tree_upper = 0;
};

struct Enumeration {
  CutSet cuts;
  /// Every emitted candidate in discovery order, duplicates included.
  std::vector<FoundCut> found;
  /// One entry per contraction level, outermost first.
  std::vector<LevelStats> levels;
  /// Candidates dropped by paranoid verification.
  std::size_t rejected = 0;
};

/// Lists all 3-edge cuts of a 3-edge-connected multigraph (self-loops are
/// ignored). Deterministic mode is exact; randomized mode is Monte Carlo
/// with 64-bit hashes. Cuts refer to the EdgeIds of g. Throws
/// PreconditionError when a bridge or a tree/back 2-cut makes the tables
/// undefined; other violations of 3-edge-connectivity give unspecified
/// output.
Enumeration enumerate_3cuts(const Multigraph& g, const EnumerateOptions& options = {});

/// True iff removing the three edges disconnects g.
bool verify_cut(const Multigraph& g, const Cut3& cut);

// ---- single-level building blocks (EdgeIds local to the level graph) ----

/// For every tree edge e (indexed by child vertex): the child vertex of the
/// deepest tree edge f >= e such that every back edge leaping over e starts
/// in the subtree of f. The no_min / no_max variants ignore mindn[0](e) or
/// maxdn[0](e) respectively. Throws PreconditionError when mindn/maxdn
/// rank 2 is missing.
struct DeepestDnCuts {
  std::vector<VertexId> deepest;
  std::vector<VertexId> no_min;
  std::vector<VertexId> no_max;
};

DeepestDnCuts compute_deepest_dn_cuts(const DfsStructure& dfs, const LowTables& low);

/// Tree over the DFS vertices (vertex v standing for its parent edge, the
/// DFS root standing for the bottom element): the parent of v is the head of
/// maxup[0](v). Parents are strict DFS ancestors.
RootedTree build_jump_tree(const DfsStructure& dfs, const LowTables& low);

namespace deterministic {

/// {e, low1(e), low2(e)} whenever exactly two back edges leap over e.
std::vector<Cut3> one_tree_edge(const DfsStructure& dfs, const LowTables& low);
/// Cuts {e, f, g}, e < f, with g joining the subtree of f to the part
/// between e and f.
std::vector<Cut3> two_tree_lower(const DfsStructure& dfs, const LowTables& low,
                                 const DeepestDnCuts& deepest);
/// Cuts {e, f, g}, e < f, with g joining the part between e and f to the
/// outside of e's subtree.
std::vector<Cut3> two_tree_upper(const DfsStructure& dfs, const LowTables& low,
                                 const DeepestDnCuts& deepest);

}  // namespace deterministic

namespace randomized {

std::vector<Cut3> one_tree_edge(const DfsStructure& dfs, const LowTables& low,
                                const CompressedHashes& hashes);
std::vector<Cut3> two_tree_lower(const DfsStructure& dfs, const LowTables& low,
                                 const CompressedHashes& hashes);
std::vector<Cut3> two_tree_upper(const DfsStructure& dfs, const LowTables& low,
                                 const CompressedHashes& hashes);

}  // namespace randomized

/// The graph obtained by contracting every connected component of the
/// back edges. Its edges are the tree edges that join different components;
/// origin[new EdgeId] is the EdgeId in the level graph.
struct ContractedLevel {
  Multigraph graph;
  std::vector<EdgeId> origin;
};

ContractedLevel contract_back_edges(const Multigraph& g, const DfsStructure& dfs);

}  // namespace fourecc
