#include "fourecc/cut_tree.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fourecc {

std::vector<std::uint32_t> part_sizes(const DfsStructure& dfs, std::span<const Cut3> cuts) {
  std::vector<std::uint32_t> sizes(cuts.size(), 0);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    VertexId below[3];
    int count = 0;
    for (const EdgeId e : cuts[i].edges) {
      if (dfs.is_tree(e)) below[count++] = dfs.head(e);
    }
    if (count == 0) throw PreconditionError("cut without a tree edge");
    // A vertex is cut off from the root iff an odd number of the cut's tree
    // edges lie on its root path.
    long long total = 0;
    for (int a = 0; a < count; ++a) {
      int on_path = 0;
      for (int b = 0; b < count; ++b) on_path += dfs.is_ancestor(below[b], below[a]) ? 1 : 0;
      const long long size = dfs.subtree_size(below[a]);
      total += (on_path % 2 == 1) ? size : -size;
    }
    sizes[i] = static_cast<std::uint32_t>(total);
  }
  return sizes;
}

CutTree build_cut_tree(const Multigraph& g, const DfsStructure& dfs, std::span<const Cut3> cuts) {
  const auto sizes = part_sizes(dfs, cuts);
  return build_cut_tree(g, dfs, cuts, sizes);
}

CutTree build_cut_tree(const Multigraph& g, const DfsStructure& dfs, std::span<const Cut3> cuts,
                       std::span<const std::uint32_t> sizes) {
  const std::size_t n = g.vertex_count();
  constexpr auto kNoNode = CutTree::kNoNode;

  // l(e) per tree edge (indexed by child vertex), decreasing |P(c)|, ties
  // in cut order: counting sort by size, then distribute.
  std::vector<std::uint32_t> by_size(n + 2, 0);
  for (const auto s : sizes) {
    if (s == 0 || s >= n) throw PreconditionError("cut side size out of range");
    ++by_size[n - s + 1];
  }
  for (std::size_t i = 1; i < by_size.size(); ++i) by_size[i] += by_size[i - 1];
  std::vector<std::uint32_t> order(cuts.size());
  for (std::uint32_t c = 0; c < cuts.size(); ++c) order[by_size[n - sizes[c]]++] = c;

  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (const Cut3& cut : cuts) {
    for (const EdgeId e : cut.edges) {
      if (dfs.is_tree(e)) ++offsets[dfs.head(e) + 1];
    }
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<std::uint32_t> lists(offsets[n]);
  {
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const std::uint32_t c : order) {
      for (const EdgeId e : cuts[c].edges) {
        if (dfs.is_tree(e)) lists[cursor[dfs.head(e)]++] = c;
      }
    }
  }

  CutTree h;
  h.parent.push_back(kNoNode);
  h.node_cut.push_back(kNoNode);
  h.cut_node.assign(cuts.size(), kNoNode);
  h.psi.assign(n, kNoNode);
  h.part_size.assign(sizes.begin(), sizes.end());
  h.visits.assign(cuts.size(), 0);
  h.psi[dfs.root()] = 0;
  std::vector<EdgeId> touched(cuts.size(), kNoEdge);

  const auto preorder = dfs.preorder();
  for (std::size_t i = 1; i < preorder.size(); ++i) {
    const VertexId v = preorder[i];
    const EdgeId e = dfs.parent_edge(v);
    std::uint32_t x = h.psi[dfs.parent(v)];
    // Up along H-edges whose cuts contain e.
    while (x != 0 && cuts[h.node_cut[x]].contains(e)) {
      touched[h.node_cut[x]] = e;
      ++h.visits[h.node_cut[x]];
      x = h.parent[x];
    }
    // Down along the remaining cuts of l(e), creating edges on first use.
    for (std::uint32_t j = offsets[v]; j < offsets[v + 1]; ++j) {
      const std::uint32_t c = lists[j];
      if (touched[c] == e) continue;
      ++h.visits[c];
      if (h.cut_node[c] == kNoNode) {
        h.cut_node[c] = static_cast<std::uint32_t>(h.parent.size());
        h.parent.push_back(x);
        h.node_cut.push_back(c);
      } else if (h.parent[h.cut_node[c]] != x) {
        throw PreconditionError("cut list is inconsistent with a cut tree at tree edge " +
                                std::to_string(e));
      }
      x = h.cut_node[c];
    }
    h.psi[v] = x;
  }
  return h;
}

Labeling four_ecc_from_tree(const CutTree& tree) { return Labeling::canonical(tree.psi); }

std::string cut_tree_to_json(const CutTree& tree, std::span<const Cut3> cuts) {
  using nlohmann::json;
  std::vector<json> vertices(tree.node_count(), json::array());
  for (VertexId v = 0; v < tree.psi.size(); ++v) vertices[tree.psi[v]].push_back(v);
  json nodes = json::array();
  json edges = json::array();
  for (std::uint32_t x = 0; x < tree.node_count(); ++x) {
    nodes.push_back({{"id", x},
                     {"parent", x == 0 ? json(nullptr) : json(tree.parent[x])},
                     {"vertices", vertices[x]}});
    if (x == 0) continue;
    const auto c = tree.node_cut[x];
    edges.push_back({{"parent", tree.parent[x]},
                     {"child", x},
                     {"cut", cuts[c].edges},
                     {"part_size", tree.part_size[c]}});
  }
  return json{{"root", 0}, {"nodes", nodes}, {"edges", edges}}.dump();
}

std::string cut_tree_to_dot(const CutTree& tree, std::span<const Cut3> cuts) {
  std::vector<std::vector<VertexId>> vertices(tree.node_count());
  for (VertexId v = 0; v < tree.psi.size(); ++v) vertices[tree.psi[v]].push_back(v);
  std::ostringstream out;
  out << "graph cut_tree {\n";
  for (std::uint32_t x = 0; x < tree.node_count(); ++x) {
    out << "  n" << x << " [label=\"{";
    for (std::size_t i = 0; i < vertices[x].size(); ++i) out << (i ? "," : "") << vertices[x][i];
    out << "}\"];\n";
  }
  for (std::uint32_t x = 1; x < tree.node_count(); ++x) {
    const auto c = tree.node_cut[x];
    const auto& e = cuts[c].edges;
    out << "  n" << tree.parent[x] << " -- n" << x << " [label=\"" << e[0] << ' ' << e[1] << ' '
        << e[2] << " |P|=" << tree.part_size[c] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fourecc
