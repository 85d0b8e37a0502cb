#pragma once

#include <cstdint>
#include <vector>

#include "fourecc/cuts.hpp"
#include "fourecc/graph.hpp"

namespace fourecc {

struct TwoEccSplit {
  std::vector<EdgeId> bridges;  // ascending
  Labeling components;
};

/// Bridges and 2-edge-connected classes of an arbitrary multigraph.
TwoEccSplit two_ecc_split(const Multigraph& g);

/// 3-edge-connectivity classes of a 2-edge-connected graph (loops allowed).
/// Two edges form a 2-cut exactly when their xor-hashes agree, so the
/// classes come from grouping equal 64-bit hashes; Monte Carlo. With
/// `paranoid`, every group is checked by BFS and a failing seed is replaced.
Labeling three_ecc_components(const Multigraph& g2, std::uint64_t seed = 0xC0FFEE,
                              bool paranoid = false);

inline constexpr std::uint32_t kNoCycle = 0xffffffffu;

/// Quotient of a 2ecc graph by its 3ecc classes. Every quotient edge lies
/// on exactly one simple cycle, and two edges of g2 form a 2-cut iff both
/// map into the quotient and share a cycle.
struct CactusOf2Cuts {
  Labeling nodes;                    // g2 vertex -> cactus node
  Multigraph quotient;               // over nodes.class_count
  std::vector<EdgeId> origin;        // quotient edge -> g2 edge
  std::vector<std::uint32_t> cycle;  // quotient edge -> cycle id
  std::vector<std::uint32_t> cycle_of_edge;  // g2 edge -> cycle id or kNoCycle
  std::uint32_t cycle_count = 0;
};

/// Throws PreconditionError when some quotient edge is on zero or several
/// cycles, which means labels3 was not the 3ecc partition of g2.
CactusOf2Cuts build_cactus(const Multigraph& g2, const Labeling& labels3);

struct AuxEdgeSource {
  EdgeId original = kNoEdge;         // kNoEdge for special edges
  std::uint32_t cycle = kNoCycle;    // set for special edges
};

/// S for one 3ecc class X: the edges of G[X] plus one special edge per
/// incident cycle of the cactus (dropped when both ends coincide).
struct AuxGraph {
  std::vector<VertexId> vertices;  // local -> g2 vertex, ascending
  Multigraph graph;
  std::vector<AuxEdgeSource> source;
};

/// One AuxGraph per class, in class order.
std::vector<AuxGraph> build_aux_graphs(const Multigraph& g2, const Labeling& labels3,
                                       const CactusOf2Cuts& cactus);

struct FourEccOptions {
  CutMode mode = CutMode::deterministic;
  std::uint64_t seed = 0xC0FFEE;
  bool paranoid = false;
};

/// Connectivity, 2ecc, 3ecc and 4ecc classes of the same graph; each
/// labeling refines the previous one.
struct ConnectivityLayers {
  Labeling connected;
  Labeling two;
  Labeling three;
  Labeling four;
  /// Number of auxiliary graphs solved and the 3-cuts found in them.
  std::size_t aux_graphs = 0;
  std::size_t cuts = 0;
};

ConnectivityLayers connectivity_layers(const Multigraph& g, const FourEccOptions& options = {});

/// 4-edge-connected components, numbered by smallest vertex.
Labeling four_ecc(const Multigraph& g, const FourEccOptions& options = {});

}  // namespace fourecc
