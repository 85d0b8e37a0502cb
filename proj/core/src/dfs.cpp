#include "fourecc/dfs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fourecc/path_top_k.hpp"

namespace fourecc {

DfsStructure build_dfs(const Multigraph& g, VertexId root) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n == 0 || root >= n) throw std::invalid_argument("DFS root out of range");
  for (EdgeId e = 0; e < m; ++e) {
    if (g.edge(e).is_loop()) {
      throw PreconditionError("self-loop on edge " + std::to_string(e) + " in DFS input");
    }
  }

  DfsStructure d;
  d.root_ = root;
  d.pre_.assign(n, 0);
  d.post_.assign(n, 0);
  d.depth_.assign(n, 0);
  d.parent_edge_.assign(n, kNoEdge);
  d.kind_.assign(m, EdgeKind::back);
  d.tail_.assign(m, kNoVertex);
  d.head_.assign(m, kNoVertex);
  d.tree_.parent.assign(n, kNoVertex);
  d.tree_.root = root;
  d.order_.reserve(n);

  std::uint32_t clock = 0;
  std::vector<std::pair<VertexId, std::uint32_t>> stack;
  stack.reserve(n);
  stack.emplace_back(root, 0);
  d.pre_[root] = ++clock;
  d.order_.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto adj = g.neighbors(v);
    if (next == adj.size()) {
      d.post_[v] = ++clock;
      stack.pop_back();
      continue;
    }
    const Incidence inc = adj[next++];
    if (inc.edge == d.parent_edge_[v] || d.tail_[inc.edge] != kNoVertex) continue;
    const VertexId w = inc.neighbor;
    if (d.pre_[w] == 0) {
      d.kind_[inc.edge] = EdgeKind::tree;
      d.tail_[inc.edge] = v;
      d.head_[inc.edge] = w;
      d.parent_edge_[w] = inc.edge;
      d.tree_.parent[w] = v;
      d.depth_[w] = d.depth_[v] + 1;
      d.pre_[w] = ++clock;
      d.order_.push_back(w);
      stack.emplace_back(w, 0);
    } else {
      // First sighting of a non-tree edge: w is an open ancestor of v.
      d.tail_[inc.edge] = v;
      d.head_[inc.edge] = w;
    }
  }
  if (d.order_.size() != n) throw PreconditionError("DFS input is disconnected");
  return d;
}

bool leaps_over(const DfsStructure& dfs, EdgeId back, EdgeId tree) {
  if (dfs.kind(back) != EdgeKind::back) throw std::invalid_argument("leaps_over: not a back edge");
  if (dfs.kind(tree) != EdgeKind::tree) throw std::invalid_argument("leaps_over: not a tree edge");
  const VertexId below = dfs.head(tree);
  return dfs.is_ancestor(below, dfs.tail(back)) && !dfs.is_ancestor(below, dfs.head(back));
}

std::vector<std::array<EdgeId, 3>> lowest_leaping_edges(const Multigraph& g,
                                                        const DfsStructure& dfs) {
  const std::size_t n = dfs.vertex_count();
  constexpr std::array<EdgeId, 3> kEmpty{kNoEdge, kNoEdge, kNoEdge};
  std::vector<std::array<EdgeId, 3>> acc(n, kEmpty);

  auto less = [&](EdgeId a, EdgeId b) {
    if (b == kNoEdge) return a != kNoEdge;
    if (a == kNoEdge) return false;
    const auto pa = dfs.pre(dfs.head(a));
    const auto pb = dfs.pre(dfs.head(b));
    return pa != pb ? pa < pb : a < b;
  };
  auto offer = [&](std::array<EdgeId, 3>& best, EdgeId e) {
    if (!less(e, best[2])) return;
    best[2] = e;
    if (less(best[2], best[1])) std::swap(best[1], best[2]);
    if (less(best[1], best[0])) std::swap(best[0], best[1]);
  };

  const auto order = dfs.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    auto& best = acc[v];
    for (const Incidence& inc : g.neighbors(v)) {
      if (!dfs.is_tree(inc.edge) && dfs.tail(inc.edge) == v) offer(best, inc.edge);
    }
    if (v == dfs.root()) {
      best = kEmpty;
      continue;
    }
    // Leaping edges of v's parent edge form a prefix in head-preorder.
    for (auto& e : best) {
      if (e != kNoEdge && dfs.pre(dfs.head(e)) >= dfs.pre(v)) e = kNoEdge;
    }
    auto& up = acc[dfs.parent(v)];
    for (const EdgeId e : best) {
      if (e != kNoEdge) offer(up, e);
    }
  }
  return acc;
}

LowTables compute_low_tables(const Multigraph& g, const DfsStructure& dfs) {
  const std::size_t n = dfs.vertex_count();
  LowTables t;
  t.low = lowest_leaping_edges(g, dfs);
  for (VertexId v = 0; v < n; ++v) {
    if (v != dfs.root() && t.low[v][0] == kNoEdge) {
      throw PreconditionError("tree edge " + std::to_string(dfs.parent_edge(v)) +
                              " is a bridge");
    }
  }

  std::vector<EdgeId> back_edges;
  for (EdgeId e = 0; e < dfs.edge_count(); ++e) {
    if (!dfs.is_tree(e)) back_edges.push_back(e);
  }
  const auto two_n = static_cast<std::uint32_t>(2 * n);
  const AncestorIndex index(dfs.tree());
  std::vector<WeightedPath> paths(back_edges.size());

  auto fill = [&](auto weight_of, std::vector<std::array<EdgeId, 2>>& out) {
    for (std::size_t i = 0; i < back_edges.size(); ++i) {
      const EdgeId e = back_edges[i];
      paths[i] = {dfs.tail(e), dfs.head(e), weight_of(e)};
    }
    const TopKCover cover = top_k_min_paths(dfs.tree(), index, paths, 2, two_n);
    out.assign(n, {kNoEdge, kNoEdge});
    for (VertexId v = 0; v < n; ++v) {
      for (std::size_t r = 0; r < 2; ++r) {
        const auto p = cover.at(v, r);
        if (p != TopKCover::kNoPath) out[v][r] = back_edges[p];
      }
    }
  };
  fill([&](EdgeId e) { return two_n - dfs.pre(dfs.head(e)); }, t.maxup);
  fill([&](EdgeId e) { return dfs.pre(dfs.tail(e)); }, t.mindn);
  fill([&](EdgeId e) { return two_n - dfs.pre(dfs.tail(e)); }, t.maxdn);
  return t;
}

std::vector<VertexId> lca_offline(const DfsStructure& dfs,
                                  std::span<const std::pair<VertexId, VertexId>> queries) {
  const std::size_t n = dfs.vertex_count();
  std::vector<VertexId> answer(queries.size(), kNoVertex);
  // Queries bucketed by the endpoint that finishes later.
  std::vector<std::uint32_t> offsets(n + 1, 0);
  auto later = [&](const std::pair<VertexId, VertexId>& q) {
    return dfs.post(q.first) > dfs.post(q.second) ? q.first : q.second;
  };
  for (const auto& q : queries) ++offsets[later(q) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<std::uint32_t> bucket(queries.size());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::uint32_t i = 0; i < queries.size(); ++i) bucket[cursor[later(queries[i])]++] = i;

  // post values are distinct in 1..2n.
  std::vector<VertexId> by_clock(2 * n + 1, kNoVertex);
  for (VertexId v = 0; v < n; ++v) by_clock[dfs.post(v)] = v;
  std::vector<VertexId> finishing;
  finishing.reserve(n);
  for (const VertexId v : by_clock) {
    if (v != kNoVertex) finishing.push_back(v);
  }

  // Finished vertices are merged into their parent, so lowest(x) is the
  // deepest still-open ancestor of x.
  UnionTreeDsu dsu(dfs.tree());
  for (const VertexId v : finishing) {
    for (std::uint32_t j = offsets[v]; j < offsets[v + 1]; ++j) {
      const auto& q = queries[bucket[j]];
      const VertexId other = q.first == v ? q.second : q.first;
      answer[bucket[j]] = dsu.lowest(other);
    }
    if (v != dfs.root()) dsu.unite(v, dfs.parent(v));
  }
  return answer;
}

}  // namespace fourecc
