#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fourecc/generators.hpp"
#include "fourecc/graph.hpp"
#include "fourecc/oracle.hpp"

namespace fourecc::testing {

inline Multigraph make(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> list) {
  std::vector<Edge> edges;
  for (auto [u, v] : list) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

inline Multigraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Multigraph(n, std::move(edges));
}

inline Multigraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return Multigraph(n, std::move(edges));
}

inline Multigraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Multigraph(n, std::move(edges));
}

inline Multigraph triple_edge() { return make(2, {{0, 1}, {0, 1}, {0, 1}}); }

// Disjoint union; b's vertices are shifted by a's count.
inline Multigraph disjoint(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<VertexId>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

inline Multigraph with_edges(const Multigraph& g, std::initializer_list<std::pair<VertexId, VertexId>> more) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto [u, v] : more) edges.push_back({u, v});
  return Multigraph(g.vertex_count(), std::move(edges));
}

// Random multigraphs that pass the brute-force 3-edge-connectivity check.
inline Multigraph random_3ecc(Rng& rng, std::size_t max_n, std::size_t max_m) {
  for (;;) {
    const std::size_t n = 2 + rng.below(max_n - 1);
    const std::size_t lo = (3 * n + 1) / 2;
    if (lo > max_m) continue;
    const std::size_t m = lo + rng.below(max_m - lo + 1);
    Multigraph g = random_multigraph(n, m, rng.next());
    if (oracle::is_k_edge_connected(g, 3)) return g;
  }
}

// Simple graph on n vertices from a bitmask over the pairs (u<v) in
// lexicographic order.
inline Multigraph from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) edges.push_back({u, v});
    }
  }
  return Multigraph(n, std::move(edges));
}

}  // namespace fourecc::testing
