#include "fourecc/cuts.hpp"

#include <stdexcept>
#include <string>

#include "fourecc/path_top_k.hpp"

namespace fourecc {

void canonicalize(CutSet& cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
}

bool verify_cut(const Multigraph& g, const Cut3& cut) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return false;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexId> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Incidence& inc : g.neighbors(queue[head])) {
      if (cut.contains(inc.edge) || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      queue.push_back(inc.neighbor);
    }
  }
  return queue.size() != n;
}

DeepestDnCuts compute_deepest_dn_cuts(const DfsStructure& dfs, const LowTables& low) {
  const std::size_t n = dfs.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> queries;
  queries.reserve(3 * n);
  for (VertexId v = 0; v < n; ++v) {
    if (v == dfs.root()) continue;
    const auto& mn = low.mindn[v];
    const auto& mx = low.maxdn[v];
    if (mn[1] == kNoEdge || mx[1] == kNoEdge) {
      throw PreconditionError("tree edge " + std::to_string(dfs.parent_edge(v)) +
                              " lies in a 2-edge cut");
    }
    queries.emplace_back(dfs.tail(mn[0]), dfs.tail(mx[0]));
    queries.emplace_back(dfs.tail(mn[1]), dfs.tail(mx[0]));
    queries.emplace_back(dfs.tail(mn[0]), dfs.tail(mx[1]));
  }
  const auto lca = lca_offline(dfs, queries);
  DeepestDnCuts out;
  out.deepest.assign(n, kNoVertex);
  out.no_min.assign(n, kNoVertex);
  out.no_max.assign(n, kNoVertex);
  std::size_t q = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == dfs.root()) continue;
    out.deepest[v] = lca[q++];
    out.no_min[v] = lca[q++];
    out.no_max[v] = lca[q++];
  }
  return out;
}

RootedTree build_jump_tree(const DfsStructure& dfs, const LowTables& low) {
  RootedTree u;
  u.root = dfs.root();
  u.parent.assign(dfs.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < dfs.vertex_count(); ++v) {
    if (v == dfs.root()) continue;
    const EdgeId up = low.maxup[v][0];
    if (up == kNoEdge) {
      throw PreconditionError("tree edge " + std::to_string(dfs.parent_edge(v)) + " is a bridge");
    }
    u.parent[v] = dfs.head(up);
  }
  return u;
}

namespace {

bool leaps(const DfsStructure& dfs, EdgeId back, VertexId below) {
  return dfs.is_ancestor(below, dfs.tail(back)) && !dfs.is_ancestor(below, dfs.head(back));
}

// Non-root vertices ordered by decreasing depth.
std::vector<VertexId> deepest_first(const DfsStructure& dfs) {
  const std::size_t n = dfs.vertex_count();
  std::vector<std::uint32_t> count(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) ++count[n - 1 - dfs.depth(v) + 1];
  for (std::size_t d = 1; d <= n; ++d) count[d] += count[d - 1];
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[count[n - 1 - dfs.depth(v)]++] = v;
  order.pop_back();  // the root, depth 0, sorts last
  return order;
}

std::vector<KeyedEdge> hash_keys(const CompressedHashes& hashes) {
  std::vector<KeyedEdge> keys(hashes.ch.size());
  for (EdgeId e = 0; e < keys.size(); ++e) keys[e] = {hashes.ch[e], e};
  return keys;
}

}  // namespace

namespace deterministic {

std::vector<Cut3> one_tree_edge(const DfsStructure& dfs, const LowTables& low) {
  std::vector<Cut3> out;
  for (VertexId v = 0; v < dfs.vertex_count(); ++v) {
    if (v == dfs.root()) continue;
    const auto& l = low.low[v];
    if (l[1] != kNoEdge && l[2] == kNoEdge) out.push_back(Cut3::of(dfs.parent_edge(v), l[0], l[1]));
  }
  return out;
}

std::vector<Cut3> two_tree_lower(const DfsStructure& dfs, const LowTables& low,
                                 const DeepestDnCuts& deepest) {
  const std::size_t n = dfs.vertex_count();
  // Path from e down to DeepestDnCut(e) covers exactly the candidates f;
  // weighting by negated depth makes the top-1 path the deepest e.
  std::vector<WeightedPath> paths;
  std::vector<VertexId> upper;
  for (VertexId v = 0; v < n; ++v) {
    if (v == dfs.root() || deepest.deepest[v] == v) continue;
    paths.push_back({v, deepest.deepest[v], static_cast<std::uint32_t>(n - dfs.depth(v))});
    upper.push_back(v);
  }
  const TopKCover cover = top_k_min_paths(dfs.tree(), paths, 1, static_cast<std::uint32_t>(n));

  std::vector<Cut3> out;
  for (VertexId f = 0; f < n; ++f) {
    const auto p = cover.at(f, 0);
    if (p == TopKCover::kNoPath) continue;
    const VertexId e = upper[p];
    const EdgeId g = low.maxup[f][0];
    const EdgeId second = low.maxup[f][1];
    if (second == kNoEdge || !leaps(dfs, second, e) || leaps(dfs, g, e)) continue;
    out.push_back(Cut3::of(dfs.parent_edge(e), dfs.parent_edge(f), g));
  }
  return out;
}

std::vector<Cut3> two_tree_upper(const DfsStructure& dfs, const LowTables& low,
                                 const DeepestDnCuts& deepest) {
  const RootedTree jump = build_jump_tree(dfs, low);
  const std::size_t n = dfs.vertex_count();
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v != jump.root) ++offsets[jump.parent[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<VertexId> children(n - 1);
  {
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (v != jump.root) children[cursor[jump.parent[v]]++] = v;
    }
  }

  // Once e is reached, the jump-tree edges below every processed edge are
  // merged, so lowest(f0) is the shallowest jump ancestor of f0 still >= e.
  UnionTreeDsu forest(jump);
  std::vector<Cut3> out;
  for (const VertexId e : deepest_first(dfs)) {
    for (std::uint32_t j = offsets[e]; j < offsets[e + 1]; ++j) forest.unite(e, children[j]);
    const std::pair<EdgeId, VertexId> candidates[] = {{low.mindn[e][0], deepest.no_min[e]},
                                                      {low.maxdn[e][0], deepest.no_max[e]}};
    for (const auto& [g, f0] : candidates) {
      const VertexId f = forest.lowest(f0);
      if (f != e) out.push_back(Cut3::of(dfs.parent_edge(e), dfs.parent_edge(f), g));
    }
  }
  return out;
}

}  // namespace deterministic

namespace randomized {

std::vector<Cut3> one_tree_edge(const DfsStructure& dfs, const LowTables& low,
                                const CompressedHashes& hashes) {
  std::vector<VertexId> edge_of;
  std::vector<std::uint64_t> queries;
  for (VertexId v = 0; v < dfs.vertex_count(); ++v) {
    if (v == dfs.root()) continue;
    edge_of.push_back(v);
    queries.push_back(hashes.ch[dfs.parent_edge(v)] ^ hashes.ch[low.low[v][0]]);
  }
  const auto hit = offline_membership(queries, hash_keys(hashes));
  std::vector<Cut3> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    const VertexId v = edge_of[i];
    const EdgeId g = hit[i];
    if (g == kNoEdge || dfs.is_tree(g) || g == low.low[v][0]) continue;
    out.push_back(Cut3::of(dfs.parent_edge(v), low.low[v][0], g));
  }
  return out;
}

std::vector<Cut3> two_tree_lower(const DfsStructure& dfs, const LowTables& low,
                                 const CompressedHashes& hashes) {
  std::vector<VertexId> edge_of;
  std::vector<std::uint64_t> queries;
  for (VertexId f = 0; f < dfs.vertex_count(); ++f) {
    if (f == dfs.root()) continue;
    edge_of.push_back(f);
    queries.push_back(hashes.ch[dfs.parent_edge(f)] ^ hashes.ch[low.maxup[f][0]]);
  }
  const auto hit = offline_membership(queries, hash_keys(hashes));
  std::vector<Cut3> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    const EdgeId f = dfs.parent_edge(edge_of[i]);
    const EdgeId e = hit[i];
    if (e == kNoEdge || !dfs.is_tree(e) || e == f) continue;
    out.push_back(Cut3::of(e, f, low.maxup[edge_of[i]][0]));
  }
  return out;
}

std::vector<Cut3> two_tree_upper(const DfsStructure& dfs, const LowTables& low,
                                 const CompressedHashes& hashes) {
  std::vector<std::pair<VertexId, EdgeId>> asked;
  std::vector<std::uint64_t> queries;
  for (VertexId e = 0; e < dfs.vertex_count(); ++e) {
    if (e == dfs.root()) continue;
    const EdgeId tree = dfs.parent_edge(e);
    for (const EdgeId g : {low.mindn[e][0], low.maxdn[e][0]}) {
      if (!asked.empty() && asked.back() == std::pair{e, g}) continue;
      asked.emplace_back(e, g);
      queries.push_back(hashes.ch[tree] ^ hashes.ch[g]);
    }
  }
  const auto hit = offline_membership(queries, hash_keys(hashes));
  std::vector<Cut3> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    const EdgeId e = dfs.parent_edge(asked[i].first);
    const EdgeId f = hit[i];
    if (f == kNoEdge || !dfs.is_tree(f) || f == e) continue;
    out.push_back(Cut3::of(e, f, asked[i].second));
  }
  return out;
}

}  // namespace randomized

ContractedLevel contract_back_edges(const Multigraph& g, const DfsStructure& dfs) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> comp(n, kNoVertex);
  std::vector<VertexId> queue;
  VertexId next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kNoVertex) continue;
    comp[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : g.neighbors(queue[head])) {
        if (dfs.is_tree(inc.edge) || comp[inc.neighbor] != kNoVertex) continue;
        comp[inc.neighbor] = next;
        queue.push_back(inc.neighbor);
      }
    }
    ++next;
  }
  ContractedLevel out;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!dfs.is_tree(e)) continue;
    const VertexId a = comp[g.edge(e).u];
    const VertexId b = comp[g.edge(e).v];
    if (a == b) continue;
    edges.push_back({a, b});
    out.origin.push_back(e);
  }
  out.graph = Multigraph(next, std::move(edges));
  return out;
}

Enumeration enumerate_3cuts(const Multigraph& input, const EnumerateOptions& options) {
  Enumeration result;
  LoopFreeGraph level = strip_self_loops(input);
  SplitMix64 level_seeds(options.seed);

  for (std::uint32_t depth = 0; level.graph.vertex_count() >= 2; ++depth) {
    const Multigraph& g = level.graph;
    LevelStats stats{g.vertex_count(), g.edge_count()};
    const DfsStructure dfs = build_dfs(g, 0);
    const LowTables low = compute_low_tables(g, dfs);

    auto emit = [&](std::vector<Cut3> found, CutCase kind, std::size_t& counter) {
      for (const Cut3& c : found) {
        if (options.paranoid && !verify_cut(g, c)) {
          ++result.rejected;
          continue;
        }
        ++counter;
        result.found.push_back({Cut3::of(level.id_map[c.edges[0]], level.id_map[c.edges[1]],
                                         level.id_map[c.edges[2]]),
                                kind, depth});
      }
    };

    if (options.mode == CutMode::deterministic) {
      const DeepestDnCuts deepest = compute_deepest_dn_cuts(dfs, low);
      emit(deterministic::one_tree_edge(dfs, low), CutCase::one_tree_edge, stats.one_tree_edge);
      emit(deterministic::two_tree_lower(dfs, low, deepest), CutCase::two_tree_lower,
           stats.two_tree_lower);
      emit(deterministic::two_tree_upper(dfs, low, deepest), CutCase::two_tree_upper,
           stats.two_tree_upper);
    } else {
      const CompressedHashes hashes = assign_compressed_hashes(g, dfs, level_seeds.next());
      emit(randomized::one_tree_edge(dfs, low, hashes), CutCase::one_tree_edge,
           stats.one_tree_edge);
      emit(randomized::two_tree_lower(dfs, low, hashes), CutCase::two_tree_lower,
           stats.two_tree_lower);
      emit(randomized::two_tree_upper(dfs, low, hashes), CutCase::two_tree_upper,
           stats.two_tree_upper);
    }
    result.levels.push_back(stats);

    // Cuts made only of tree edges survive contraction of the back edges.
    ContractedLevel next = contract_back_edges(g, dfs);
    for (EdgeId& e : next.origin) e = level.id_map[e];
    level.graph = std::move(next.graph);
    level.id_map = std::move(next.origin);
  }

  result.cuts.reserve(result.found.size());
  for (const auto& f : result.found) result.cuts.push_back(f.cut);
  canonicalize(result.cuts);
  return result;
}

}  // namespace fourecc
