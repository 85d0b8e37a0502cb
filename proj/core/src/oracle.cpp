#include "fourecc/oracle.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fourecc/cut_tree.hpp"

namespace fourecc::oracle {

namespace {

std::size_t reach_count(const Multigraph& g, const std::vector<std::uint8_t>& removed,
                        VertexId from) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(v)) {
      if (removed[inc.edge] || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      ++count;
      stack.push_back(inc.neighbor);
    }
  }
  return count;
}

std::string labeling_text(const Labeling& l) {
  std::ostringstream out;
  for (const auto& cls : l.classes()) {
    out << '[';
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
    out << ']';
  }
  return out.str();
}

std::string cuts_text(const CutSet& cuts) {
  std::ostringstream out;
  for (const Cut3& c : cuts) out << '[' << c.edges[0] << ',' << c.edges[1] << ',' << c.edges[2] << ']';
  return out.str();
}

}  // namespace

bool disconnects(const Multigraph& g, std::span<const EdgeId> removed) {
  if (g.vertex_count() < 2) return false;
  std::vector<std::uint8_t> mask(g.edge_count(), 0);
  for (const EdgeId e : removed) mask[e] = 1;
  return reach_count(g, mask, 0) != g.vertex_count();
}

bool edge_connectivity_pair(const Multigraph& g, VertexId u, VertexId v, unsigned k) {
  if (u == v) throw std::invalid_argument("edge_connectivity_pair needs distinct vertices");
  // flow[e] in {-1, 0, 1}, positive meaning from edge(e).u to edge(e).v.
  std::vector<int> flow(g.edge_count(), 0);
  std::vector<EdgeId> via(g.vertex_count());
  std::vector<VertexId> queue;
  for (unsigned found = 0; found < k; ++found) {
    std::fill(via.begin(), via.end(), kNoEdge);
    queue.assign(1, u);
    bool reached = false;
    for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
      const VertexId x = queue[head];
      for (const Incidence& inc : g.neighbors(x)) {
        const Edge& ed = g.edge(inc.edge);
        if (ed.is_loop() || inc.neighbor == u || via[inc.neighbor] != kNoEdge) continue;
        const int along = ed.u == x ? flow[inc.edge] : -flow[inc.edge];
        if (along >= 1) continue;
        via[inc.neighbor] = inc.edge;
        if (inc.neighbor == v) {
          reached = true;
          break;
        }
        queue.push_back(inc.neighbor);
      }
    }
    if (!reached) return false;
    for (VertexId x = v; x != u;) {
      const EdgeId e = via[x];
      const VertexId prev = g.edge(e).other(x);
      flow[e] += g.edge(e).u == prev ? 1 : -1;
      x = prev;
    }
  }
  return true;
}

bool is_k_edge_connected(const Multigraph& g, unsigned k) {
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    if (!edge_connectivity_pair(g, 0, v, k)) return false;
  }
  return true;
}

CutSet brute_3cuts(const Multigraph& g) {
  CutSet out;
  const auto m = static_cast<EdgeId>(g.edge_count());
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = a + 1; b < m; ++b) {
      for (EdgeId c = b + 1; c < m; ++c) {
        const EdgeId removed[3] = {a, b, c};
        if (disconnects(g, removed)) out.push_back(Cut3::of(a, b, c));
      }
    }
  }
  return out;
}

Labeling brute_partition(const Multigraph& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("brute_partition needs k >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> related(n * n, 0);
  for (VertexId a = 0; a < n; ++a) {
    related[a * n + a] = 1;
    for (VertexId b = a + 1; b < n; ++b) {
      const bool r = edge_connectivity_pair(g, a, b, k);
      related[a * n + b] = related[b * n + a] = r;
    }
  }
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (related[a * n + b]) parent[find(a)] = find(b);
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (find(a) == find(b) && !related[a * n + b]) {
        throw std::logic_error("k-edge-connectivity relation was not transitive");
      }
    }
  }
  std::vector<std::uint32_t> raw(n);
  for (VertexId v = 0; v < n; ++v) raw[v] = find(v);
  return Labeling::canonical(raw);
}

std::vector<EdgeId> uncompressed_hash(const Multigraph& g, const DfsStructure& dfs, EdgeId e) {
  if (!dfs.is_tree(e)) return {e};
  std::vector<EdgeId> out;
  for (EdgeId b = 0; b < g.edge_count(); ++b) {
    if (dfs.is_tree(b)) continue;
    for (VertexId x = dfs.tail(b); x != dfs.head(b); x = dfs.parent(x)) {
      if (dfs.parent_edge(x) == e) {
        out.push_back(b);
        break;
      }
    }
  }
  return out;
}

std::string digest(std::string_view payload) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : payload) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

OracleReport compare_labelings(const std::string& stage, const Labeling& expected,
                               const Labeling& actual) {
  OracleReport r{stage, digest(labeling_text(expected)), digest(labeling_text(actual)), {}};
  if (expected.label.size() != actual.label.size()) {
    r.mismatches.push_back("vertex counts differ");
    return r;
  }
  const auto want = expected.classes();
  const auto got = actual.classes();
  for (VertexId v = 0; v < expected.label.size(); ++v) {
    const auto& a = want[expected.label[v]];
    const auto& b = got[actual.label[v]];
    if (a == b || a.front() != v) continue;  // report each expected class once
    std::ostringstream msg;
    msg << "class of vertex " << v << ": expected " << a.size() << " vertices, got " << b.size();
    r.mismatches.push_back(msg.str());
  }
  if (r.mismatches.empty() && r.expected_digest != r.actual_digest) {
    r.mismatches.push_back("class numbering differs");
  }
  return r;
}

OracleReport compare_cuts(const std::string& stage, const CutSet& expected, const CutSet& actual) {
  OracleReport r{stage, digest(cuts_text(expected)), digest(cuts_text(actual)), {}};
  auto describe = [](const Cut3& c) {
    return std::to_string(c.edges[0]) + "," + std::to_string(c.edges[1]) + "," +
           std::to_string(c.edges[2]);
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < expected.size() || j < actual.size()) {
    if (j == actual.size() || (i < expected.size() && expected[i] < actual[j])) {
      r.mismatches.push_back("missing cut {" + describe(expected[i++]) + "}");
    } else if (i == expected.size() || actual[j] < expected[i]) {
      r.mismatches.push_back("spurious cut {" + describe(actual[j++]) + "}");
    } else {
      ++i;
      ++j;
    }
  }
  return r;
}

std::vector<OracleReport> verify_all(const Multigraph& input, const FourEccOptions& options) {
  const Multigraph g = strip_self_loops(input).graph;
  std::vector<OracleReport> out;
  const ConnectivityLayers layers = connectivity_layers(g, options);
  out.push_back(compare_labelings("components1", brute_partition(g, 1), layers.connected));
  out.push_back(compare_labelings("components2", brute_partition(g, 2), layers.two));
  out.push_back(compare_labelings("components3", brute_partition(g, 3), layers.three));
  out.push_back(compare_labelings("components4", brute_partition(g, 4), layers.four));
  if (g.vertex_count() < 2 || !is_k_edge_connected(g, 3)) return out;

  const Enumeration en = enumerate_3cuts(g, {options.mode, options.seed, options.paranoid});
  out.push_back(compare_cuts("cuts3", brute_3cuts(g), en.cuts));

  OracleReport split{"cut-tree", "", "", {}};
  const DfsStructure dfs = build_dfs(g, 0);
  const CutTree tree = build_cut_tree(g, dfs, en.cuts);
  std::string want;
  std::string got;
  for (std::uint32_t c = 0; c < en.cuts.size(); ++c) {
    std::vector<std::uint8_t> removed(g.edge_count(), 0);
    for (const EdgeId e : en.cuts[c].edges) removed[e] = 1;
    std::vector<std::uint8_t> root_side(g.vertex_count(), 0);
    std::vector<VertexId> stack{dfs.root()};
    root_side[dfs.root()] = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(v)) {
        if (removed[inc.edge] || root_side[inc.neighbor]) continue;
        root_side[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      bool below = false;
      for (std::uint32_t x = tree.psi[v]; x != 0; x = tree.parent[x]) {
        if (x == tree.cut_node[c]) below = true;
      }
      want.push_back(root_side[v] ? '0' : '1');
      got.push_back(below ? '1' : '0');
      if (below == static_cast<bool>(root_side[v])) {
        split.mismatches.push_back("cut " + std::to_string(c) + " misplaces vertex " +
                                   std::to_string(v));
      }
    }
  }
  split.expected_digest = digest(want);
  split.actual_digest = digest(got);
  out.push_back(std::move(split));
  return out;
}

}  // namespace fourecc::oracle
