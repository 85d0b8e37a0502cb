#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fourecc/cuts.hpp"
#include "fourecc/reduction.hpp"

// Brute-force ground truth. Slow on purpose: meant for n up to about 12 and
// m up to about 60.

namespace fourecc::oracle {

/// True iff removing the listed edges leaves g disconnected (n >= 2).
bool disconnects(const Multigraph& g, std::span<const EdgeId> removed);

/// True iff at least k edge-disjoint u-v paths exist (capped augmenting
/// paths, O(k m)).
bool edge_connectivity_pair(const Multigraph& g, VertexId u, VertexId v, unsigned k);

/// Connected and no pair separable by k-1 edges. Graphs with < 2 vertices
/// count as k-edge-connected.
bool is_k_edge_connected(const Multigraph& g, unsigned k);

/// Every 3-subset of edges that disconnects g, by exhaustive scan.
CutSet brute_3cuts(const Multigraph& g);

/// k-edge-connected classes from all pairwise tests. Throws std::logic_error
/// if the pairwise relation was not already transitive.
Labeling brute_partition(const Multigraph& g, unsigned k);

/// H(e): {e} for a back edge, the back edges whose tree path covers e for a
/// tree edge. Ascending.
std::vector<EdgeId> uncompressed_hash(const Multigraph& g, const DfsStructure& dfs, EdgeId e);

struct OracleReport {
  std::string stage;
  std::string expected_digest;
  std::string actual_digest;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// 64-bit FNV-1a of a payload, as 16 hex digits.
std::string digest(std::string_view payload);

OracleReport compare_labelings(const std::string& stage, const Labeling& expected,
                               const Labeling& actual);
OracleReport compare_cuts(const std::string& stage, const CutSet& expected, const CutSet& actual);

/// Runs every stage that applies to g against its brute-force counterpart:
/// 2/3/4-edge-connected classes always; when g is 3-edge-connected also the
/// cut list (in the requested mode) and the cut tree's split property.
std::vector<OracleReport> verify_all(const Multigraph& g, const FourEccOptions& options = {});

}  // namespace fourecc::oracle
