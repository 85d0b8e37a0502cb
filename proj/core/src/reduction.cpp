#include "fourecc/reduction.hpp"

#include <string>

#include "fourecc/cut_tree.hpp"
#include "fourecc/dfs.hpp"
#include "fourecc/hashing.hpp"

namespace fourecc {

TwoEccSplit two_ecc_split(const Multigraph& g) {
  TwoEccSplit out;
  const Labeling cc = connected_components(g);
  std::vector<std::uint8_t> keep(g.edge_count(), 1);
  for (const Subgraph& sub : split_by_labels(g, cc)) {
    if (sub.graph.vertex_count() < 2) continue;
    const LoopFreeGraph lf = strip_self_loops(sub.graph);
    const DfsStructure dfs = build_dfs(lf.graph, 0);
    const auto low = lowest_leaping_edges(lf.graph, dfs);
    for (VertexId v = 0; v < lf.graph.vertex_count(); ++v) {
      if (v == dfs.root() || low[v][0] != kNoEdge) continue;
      const EdgeId e = sub.to_parent_edge[lf.id_map[dfs.parent_edge(v)]];
      out.bridges.push_back(e);
      keep[e] = 0;
    }
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  out.components = connected_components(g, keep);
  return out;
}

namespace {

struct HashLabels {
  Labeling labels;
  bool consistent = false;
};

// Groups of equal hash, as [begin, end) ranges into the sorted records.
template <typename F>
void for_each_group(const std::vector<KeyedEdge>& sorted, F&& visit) {
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j].key == sorted[i].key) ++j;
    visit(i, j);
    i = j;
  }
}

bool disconnects_pair(const Multigraph& g, EdgeId a, EdgeId b) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexId> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Incidence& inc : g.neighbors(queue[head])) {
      if (inc.edge == a || inc.edge == b || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      queue.push_back(inc.neighbor);
    }
  }
  return queue.size() != n;
}

HashLabels label_by_hashes(const Multigraph& g, const DfsStructure& dfs, std::uint64_t seed,
                           bool paranoid) {
  const std::size_t n = g.vertex_count();
  const CompressedHashes hashes = assign_compressed_hashes(g, dfs, seed);

  // Tree edges in preorder first, so within a group the tree edges come out
  // shallow to deep after the stable sort.
  std::vector<KeyedEdge> records;
  records.reserve(g.edge_count());
  const auto preorder = dfs.preorder();
  for (std::size_t i = 1; i < preorder.size(); ++i) {
    const EdgeId e = dfs.parent_edge(preorder[i]);
    if (hashes.ch[e] == 0) {
      throw PreconditionError("edge " + std::to_string(e) + " is a bridge");
    }
    records.push_back({hashes.ch[e], e});
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!dfs.is_tree(e)) records.push_back({hashes.ch[e], e});
  }
  radix_sort(records);

  SplitMix64 rng(seed ^ 0x5bd1e9955bd1e995ULL);
  std::vector<std::uint64_t> delta(n, 0);
  std::size_t expected_classes = 1;
  bool consistent = true;
  std::vector<VertexId> heads;
  for_each_group(records, [&](std::size_t begin, std::size_t end) {
    if (end - begin < 2) return;
    expected_classes += end - begin - 1;
    heads.clear();
    std::size_t back = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const EdgeId e = records[i].edge;
      if (dfs.is_tree(e)) {
        heads.push_back(dfs.head(e));
      } else {
        ++back;
      }
    }
    if (back > 1) consistent = false;
    for (std::size_t i = 1; i < heads.size(); ++i) {
      if (!dfs.is_ancestor(heads[i - 1], heads[i])) consistent = false;
    }
    if (paranoid) {
      for (std::size_t i = begin + 1; i < end; ++i) {
        if (!disconnects_pair(g, records[begin].edge, records[i].edge)) consistent = false;
      }
    }
    // Segment i of the vertical path gets word r_i; the part above the
    // first edge is 0, and without a back edge the path closes back into it.
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < heads.size(); ++i) {
      const bool last = i + 1 == heads.size();
      const std::uint64_t r = (last && back == 0) ? 0 : rng.next();
      delta[heads[i]] ^= r ^ prev;
      prev = r;
    }
  });

  std::vector<KeyedEdge> by_label;
  by_label.reserve(n);
  std::vector<std::uint64_t> word(n, 0);
  for (const VertexId v : preorder) {
    if (v != dfs.root()) word[v] = word[dfs.parent(v)] ^ delta[v];
    by_label.push_back({word[v], v});
  }
  radix_sort(by_label);
  std::vector<std::uint32_t> raw(n, 0);
  std::uint32_t next = 0;
  for_each_group(by_label, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) raw[by_label[i].edge] = next;
    ++next;
  });
  if (next != expected_classes) consistent = false;
  return {Labeling::canonical(raw), consistent};
}

}  // namespace

Labeling three_ecc_components(const Multigraph& g2, std::uint64_t seed, bool paranoid) {
  const LoopFreeGraph lf = strip_self_loops(g2);
  const std::size_t n = lf.graph.vertex_count();
  if (n <= 1) return Labeling::canonical(std::vector<std::uint32_t>(n, 0));
  const DfsStructure dfs = build_dfs(lf.graph, 0);
  SplitMix64 reseed(seed);
  std::uint64_t current = seed;
  for (int attempt = 0; attempt < 16; ++attempt) {
    HashLabels result = label_by_hashes(lf.graph, dfs, current, paranoid);
    if (result.consistent) return std::move(result.labels);
    current = reseed.next();
  }
  throw PreconditionError("hash grouping never became consistent; is the graph 2-edge-connected?");
}

CactusOf2Cuts build_cactus(const Multigraph& g2, const Labeling& labels3) {
  CactusOf2Cuts out;
  out.nodes = labels3;
  out.cycle_of_edge.assign(g2.edge_count(), kNoCycle);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g2.edge_count(); ++e) {
    const Edge& ed = g2.edge(e);
    const auto a = labels3.label[ed.u];
    const auto b = labels3.label[ed.v];
    if (a == b) continue;
    edges.push_back({a, b});
    out.origin.push_back(e);
  }
  out.quotient = Multigraph(labels3.class_count, std::move(edges));
  out.cycle.assign(out.quotient.edge_count(), kNoCycle);
  if (out.quotient.vertex_count() <= 1) return out;

  const DfsStructure dfs = build_dfs(out.quotient, 0);
  auto fail = [&](EdgeId q) {
    throw PreconditionError("cactus edge " + std::to_string(out.origin[q]) +
                            " is not on exactly one cycle");
  };
  for (EdgeId b = 0; b < out.quotient.edge_count(); ++b) {
    if (dfs.is_tree(b)) continue;
    const std::uint32_t id = out.cycle_count++;
    out.cycle[b] = id;
    for (VertexId v = dfs.tail(b); v != dfs.head(b); v = dfs.parent(v)) {
      const EdgeId t = dfs.parent_edge(v);
      if (out.cycle[t] != kNoCycle) fail(t);
      out.cycle[t] = id;
    }
  }
  for (EdgeId q = 0; q < out.quotient.edge_count(); ++q) {
    if (out.cycle[q] == kNoCycle) fail(q);
    out.cycle_of_edge[out.origin[q]] = out.cycle[q];
  }
  return out;
}

std::vector<AuxGraph> build_aux_graphs(const Multigraph& g2, const Labeling& labels3,
                                       const CactusOf2Cuts& cactus) {
  const std::uint32_t k = labels3.class_count;
  std::vector<AuxGraph> out(k);
  std::vector<VertexId> local(g2.vertex_count());
  for (VertexId v = 0; v < g2.vertex_count(); ++v) {
    auto& aux = out[labels3.label[v]];
    local[v] = static_cast<VertexId>(aux.vertices.size());
    aux.vertices.push_back(v);
  }
  std::vector<std::vector<Edge>> edges(k);
  for (EdgeId e = 0; e < g2.edge_count(); ++e) {
    const Edge& ed = g2.edge(e);
    const auto x = labels3.label[ed.u];
    if (ed.is_loop() || x != labels3.label[ed.v]) continue;
    edges[x].push_back({local[ed.u], local[ed.v]});
    out[x].source.push_back({e, kNoCycle});
  }

  // Every cycle through node X enters and leaves it once: pair the X-side
  // endpoints of its two quotient edges.
  std::vector<KeyedEdge> ends;
  ends.reserve(2 * cactus.origin.size());
  for (EdgeId q = 0; q < cactus.origin.size(); ++q) {
    const Edge& ed = g2.edge(cactus.origin[q]);
    const std::uint64_t c = cactus.cycle[q];
    ends.push_back({(std::uint64_t{labels3.label[ed.u]} << 32) | c, ed.u});
    ends.push_back({(std::uint64_t{labels3.label[ed.v]} << 32) | c, ed.v});
  }
  radix_sort(ends);
  for (std::size_t i = 0; i < ends.size(); i += 2) {
    if (i + 1 >= ends.size() || ends[i + 1].key != ends[i].key ||
        (i + 2 < ends.size() && ends[i + 2].key == ends[i].key)) {
      throw PreconditionError("cactus cycle does not pass through a node exactly once");
    }
    const auto x = static_cast<std::uint32_t>(ends[i].key >> 32);
    const VertexId a = local[ends[i].edge];
    const VertexId b = local[ends[i + 1].edge];
    if (a == b) continue;
    edges[x].push_back({a, b});
    out[x].source.push_back({kNoEdge, static_cast<std::uint32_t>(ends[i].key)});
  }
  for (std::uint32_t x = 0; x < k; ++x) {
    out[x].graph = Multigraph(out[x].vertices.size(), std::move(edges[x]));
  }
  return out;
}

ConnectivityLayers connectivity_layers(const Multigraph& input, const FourEccOptions& options) {
  const Multigraph g = strip_self_loops(input).graph;
  const std::size_t n = g.vertex_count();
  ConnectivityLayers out;
  out.connected = connected_components(g);
  const TwoEccSplit split = two_ecc_split(g);
  out.two = split.components;

  std::vector<std::uint8_t> keep(g.edge_count(), 1);
  for (const EdgeId b : split.bridges) keep[b] = 0;
  std::vector<std::uint32_t> raw3(n, 0);
  std::vector<std::uint32_t> raw4(n, 0);
  std::uint32_t next3 = 0;
  std::uint32_t next4 = 0;
  SplitMix64 seeds(options.seed);

  for (const Subgraph& sub : split_by_labels(g, out.two, keep)) {
    const auto& up = sub.to_parent_vertex;
    if (up.size() == 1) {
      raw3[up[0]] = next3++;
      raw4[up[0]] = next4++;
      continue;
    }
    const Labeling l3 = three_ecc_components(sub.graph, seeds.next(), options.paranoid);
    for (VertexId x = 0; x < up.size(); ++x) raw3[up[x]] = next3 + l3.label[x];
    next3 += l3.class_count;

    const CactusOf2Cuts cactus = build_cactus(sub.graph, l3);
    for (const AuxGraph& aux : build_aux_graphs(sub.graph, l3, cactus)) {
      if (aux.vertices.size() == 1) {
        raw4[up[aux.vertices[0]]] = next4++;
        continue;
      }
      const Enumeration en =
          enumerate_3cuts(aux.graph, {options.mode, seeds.next(), options.paranoid});
      const DfsStructure dfs = build_dfs(aux.graph, 0);
      const CutTree tree = build_cut_tree(aux.graph, dfs, en.cuts);
      const Labeling fibers = four_ecc_from_tree(tree);
      for (VertexId x = 0; x < aux.vertices.size(); ++x) {
        raw4[up[aux.vertices[x]]] = next4 + fibers.label[x];
      }
      next4 += fibers.class_count;
      ++out.aux_graphs;
      out.cuts += en.cuts.size();
    }
  }
  out.three = Labeling::canonical(raw3);
  out.four = Labeling::canonical(raw4);
  return out;
}

Labeling four_ecc(const Multigraph& g, const FourEccOptions& options) {
  return connectivity_layers(g, options).four;
}

}  // namespace fourecc
