#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fourecc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Raised when an edge-list document cannot be read. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an input violates an algorithm's structural precondition
/// (disconnected, not 2- or 3-edge-connected, inconsistent cut family...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u;
  VertexId v;

  bool is_loop() const noexcept { return u == v; }
  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Immutable undirected multigraph with dense vertex and edge ids.
///
/// Adjacency lists follow edge insertion order: edge e = (u, v) is appended
/// to u's list and then to v's. A self-loop appears twice in its vertex's
/// list. Parallel edges are kept as distinct EdgeIds.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> neighbors(VertexId v) const {
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

/// A partition of the vertex set. Labels are dense in [0, class_count).
struct Labeling {
  std::vector<std::uint32_t> label;
  std::uint32_t class_count = 0;

  /// Renumbers arbitrary labels so classes are numbered by their minimum
  /// vertex. Two labelings describe the same partition iff their
  /// canonical forms are equal.
  static Labeling canonical(std::span<const std::uint32_t> raw);

  /// Vertices of each class, classes ordered by label, vertices ascending.
  std::vector<std::vector<VertexId>> classes() const;

  bool same(VertexId a, VertexId b) const { return label[a] == label[b]; }
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Parses the "n m" header followed by m "u v" lines.
Multigraph parse_graph(std::string_view text);
std::string format_graph(const Multigraph& g);
/// {"n": .., "m": .., "edges": [[u, v], ...]}
std::string graph_to_json(const Multigraph& g);

struct LoopFreeGraph {
  Multigraph graph;
  /// id_map[new EdgeId] = original EdgeId.
  std::vector<EdgeId> id_map;
};

LoopFreeGraph strip_self_loops(const Multigraph& g);

/// Connectivity classes using only edges with keep_edge[e] set (all edges
/// when keep_edge is empty).
Labeling connected_components(const Multigraph& g, std::span<const std::uint8_t> keep_edge = {});

/// A vertex-induced piece of a parent graph with id translation both ways.
struct Subgraph {
  Multigraph graph;
  std::vector<VertexId> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
};

/// One subgraph per class of `parts`, containing the edges whose endpoints
/// both lie in the class and for which `keep_edge[e]` is set (all edges when
/// `keep_edge` is empty). Local vertex ids follow ascending parent ids.
std::vector<Subgraph> split_by_labels(const Multigraph& g, const Labeling& parts,
                                      std::span<const std::uint8_t> keep_edge = {});

}  // namespace fourecc
