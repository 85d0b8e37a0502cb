// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Sizes and tolerances are fixed here, not tunable.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fourecc/cut_tree.hpp"
#include "fourecc/dsu.hpp"
#include "fourecc/generators.hpp"
#include "fourecc/hashing.hpp"
#include "fourecc/oracle.hpp"
#include "fourecc/path_top_k.hpp"
#include "fourecc/reduction.hpp"
#include "support.hpp"

namespace fourecc {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> notes;  // first few violations, then summary facts

  void fail(std::string what) {
    ++violations;
    if (notes.size() < 5) notes.push_back(std::move(what));
  }
};

int failures = 0;

void report(int id, const char* title, const Outcome& r, double seconds) {
  const bool pass = r.violations == 0 && r.checked > 0;
  failures += !pass;
  std::printf("%s criterion %d: %s (%zu checked, %zu violations, %.1fs)\n", pass ? "PASS" : "FAIL", id,
              title, r.checked, r.violations, seconds);
  for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
}

void run(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  report(id, title, r, std::chrono::duration<double>(Clock::now() - start).count());
}

std::string one_line(const Multigraph& g) {
  std::string s = std::to_string(g.vertex_count()) + ":";
  for (const Edge& e : g.edges()) s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// ---------------------------------------------------------------- 1

Outcome four_ecc_exhaustive() {
  Outcome r;
  auto check = [&](const Multigraph& g) {
    ++r.checked;
    const Labeling want = oracle::brute_partition(g, 4);
    if (four_ecc(g) != want) r.fail("four_ecc differs on " + one_line(g));
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << pair_count(n)); ++mask) {
      const Multigraph g = testing::from_mask(n, mask);
      if (connected_components(g).class_count == 1) check(g);
    }
  }
  Rng rng(0x4ecc);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t n = 2 + rng.below(7);
    check(random_multigraph(n, rng.below(17), rng.next()));
  }
  return r;
}

// ---------------------------------------------------------------- 2, 4

std::vector<Multigraph> three_ecc_corpus() {
  std::vector<Multigraph> corpus{testing::complete(4), testing::complete(5), testing::triple_edge(),
                                 generate("k4_chain", 8, 0)};
  Rng rng(0x3c07);
  for (int i = 0; i < 2000; ++i) corpus.push_back(testing::random_3ecc(rng, 8, 16));
  return corpus;
}

Outcome cut_enumeration(const std::vector<Multigraph>& corpus) {
  Outcome r;
  for (const Multigraph& g : corpus) {
    ++r.checked;
    const CutSet want = oracle::brute_3cuts(g);
    const CutSet got = enumerate_3cuts(g).cuts;
    if (got != want) r.fail("CutSet differs on " + one_line(g));
  }
  // Named instances, against the oracle's counts.
  auto count = [&](std::size_t i, std::size_t expected, const char* name) {
    if (oracle::brute_3cuts(corpus[i]).size() != expected) r.fail(std::string("oracle count for ") + name);
  };
  count(0, 4, "K4");
  count(1, 0, "K5");
  count(2, 1, "triple edge");
  const CutSet chain = enumerate_3cuts(corpus[3]).cuts;
  if (!std::binary_search(chain.begin(), chain.end(), Cut3::of(6, 7, 8))) {
    r.fail("k4_chain(8) is missing its joining triple");
  }
  return r;
}

Outcome cut_tree_structure(const std::vector<Multigraph>& corpus) {
  Outcome r;
  for (const Multigraph& g : corpus) {
    ++r.checked;
    const CutSet cuts = enumerate_3cuts(g).cuts;
    const DfsStructure dfs = build_dfs(g, 0);
    CutTree tree;
    try {
      tree = build_cut_tree(g, dfs, cuts);
    } catch (const PreconditionError& e) {
      r.fail(std::string("reconstruction assertion fired on ") + one_line(g) + ": " + e.what());
      continue;
    }
    if (tree.node_count() != cuts.size() + 1) r.fail("node count on " + one_line(g));
    std::vector<std::uint8_t> used(tree.node_count(), 0);
    for (std::uint32_t c = 0; c < cuts.size(); ++c) {
      const auto x = tree.cut_node[c];
      if (x == 0 || x >= tree.node_count() || used[x]++ || tree.node_cut[x] != c) {
        r.fail("cut/edge bijection on " + one_line(g));
      }
      if (tree.visits[c] > 3) r.fail("cut visited more than 3 times on " + one_line(g));
    }
    for (std::uint32_t x = 1; x < tree.node_count(); ++x) {
      const auto p = tree.parent[x];
      if (p != 0 && tree.part_size[tree.node_cut[x]] >= tree.part_size[tree.node_cut[p]]) {
        r.fail("part sizes not decreasing on " + one_line(g));
      }
    }
    // Split property: vertices below cut_node[c] are exactly the far side.
    for (std::uint32_t c = 0; c < cuts.size(); ++c) {
      std::vector<std::uint8_t> removed(g.edge_count(), 0);
      for (const EdgeId e : cuts[c].edges) removed[e] = 1;
      std::vector<std::uint8_t> keep(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) keep[e] = !removed[e];
      const Labeling sides = connected_components(g, keep);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool below = false;
        for (auto x = tree.psi[v]; x != 0; x = tree.parent[x]) below |= x == tree.cut_node[c];
        if (below == sides.same(v, dfs.root())) {
          r.fail("split property of cut " + std::to_string(c) + " on " + one_line(g));
          break;
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- 3

Outcome randomized_agreement() {
  Outcome r;
  Rng rng(0x5eed);
  auto compare = [&](const Multigraph& g, std::uint64_t seed) {
    ++r.checked;
    const CutSet det = enumerate_3cuts(g).cuts;
    const CutSet ran = enumerate_3cuts(g, {CutMode::randomized, seed, false}).cuts;
    if (det != ran) r.fail("disagreement on " + one_line(g) + " seed " + std::to_string(seed));
  };
  for (int i = 0; i < 1500; ++i) {
    const Multigraph g = testing::random_3ecc(rng, 8, 16);
    for (int s = 0; s < 4; ++s) compare(g, rng.next());
  }
  // Larger instances: 3ecc by construction or checked by the pipeline.
  std::vector<Multigraph> big;
  while (big.size() < 200) {
    const auto k = big.size() % 3;
    const std::size_t n = 20 + rng.below(200);
    if (k == 0) big.push_back(generate("three_cycles", n, rng.next()));
    if (k == 1) big.push_back(generate("k4_chain", 4 * (1 + n / 8), rng.next()));
    if (k == 2) {
      Multigraph g = strip_self_loops(generate("random_multi", 2 * (n / 2), rng.next(), 3)).graph;
      if (connectivity_layers(g).three.class_count == 1) big.push_back(std::move(g));
    }
  }
  for (const Multigraph& g : big) {
    for (int s = 0; s < 20; ++s) compare(g, rng.next());
  }
  return r;
}

// ---------------------------------------------------------------- 5

RootedTree random_tree(Rng& rng, std::size_t k, std::vector<std::uint32_t>* depth = nullptr) {
  std::vector<VertexId> order(k);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  RootedTree t{std::vector<VertexId>(k, kNoVertex), order[0]};
  if (depth) depth->assign(k, 0);
  for (std::size_t i = 1; i < k; ++i) {
    t.parent[order[i]] = order[rng.below(i)];
    if (depth) (*depth)[order[i]] = (*depth)[t.parent[order[i]]] + 1;
  }
  return t;
}

void dsu_sequences(Outcome& r) {
  Rng rng(0xd5);
  for (int round = 0; round < 10000; ++round) {
    ++r.checked;
    const std::size_t k = 1 + rng.below(50);
    std::vector<std::uint32_t> depth;
    const RootedTree t = random_tree(rng, k, &depth);
    UnionTreeDsu dsu(t);
    std::vector<std::uint32_t> naive(k);
    std::iota(naive.begin(), naive.end(), 0);
    const std::size_t ops = k > 1 ? rng.below(2 * k) : 0;
    bool bad = false;
    for (std::size_t op = 0; op < ops && !bad; ++op) {
      VertexId x = static_cast<VertexId>(rng.below(k));
      if (x == t.root) continue;
      dsu.unite(x, t.parent[x]);
      const auto from = naive[x];
      for (auto& s : naive) {
        if (s == from) s = naive[t.parent[x]];
      }
      for (VertexId a = 0; a < k && !bad; ++a) {
        VertexId shallowest = a;
        for (VertexId b = 0; b < k; ++b) {
          if (naive[b] == naive[a] && depth[b] < depth[shallowest]) shallowest = b;
        }
        bad = dsu.lowest(a) != shallowest || (dsu.find(a) == dsu.find(x)) != (naive[a] == naive[x]);
      }
    }
    if (bad) r.fail("DSU sequence " + std::to_string(round));
  }
}

void top_k_instances(Outcome& r) {
  Rng rng(0x70b);
  for (int round = 0; round < 1000; ++round) {
    ++r.checked;
    const std::size_t n = 1 + rng.below(40);
    const RootedTree tree = random_tree(rng, n);
    const auto max_weight = static_cast<std::uint32_t>(rng.below(60));
    std::vector<WeightedPath> paths(rng.below(201));
    for (auto& p : paths) {
      p = {static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)),
           static_cast<std::uint32_t>(rng.below(max_weight + 1))};
    }
    const std::size_t k = 1 + rng.below(3);
    const TopKCover cover = top_k_min_paths(tree, paths, k, max_weight);
    const AncestorIndex index(tree);
    for (VertexId child = 0; child < n; ++child) {
      if (child == tree.root) continue;
      auto covers = [&](const WeightedPath& p) {
        return index.is_ancestor(child, p.u) != index.is_ancestor(child, p.v);
      };
      std::vector<std::uint32_t> want;
      for (const auto& p : paths) {
        if (covers(p)) want.push_back(p.weight);
      }
      std::sort(want.begin(), want.end());
      want.resize(std::min(want.size(), k));
      std::vector<std::uint32_t> got;
      bool bogus = false;
      for (const auto i : cover.paths(child)) {
        bogus |= !covers(paths[i]);
        got.push_back(paths[i].weight);
      }
      std::sort(got.begin(), got.end());
      if (bogus || got != want) {
        r.fail("top-k instance " + std::to_string(round));
        break;
      }
    }
  }
}

// Connected simple graphs on n <= 7 vertices, one per isomorphism class.
// Orderly-ish generation: extend every class on n-1 vertices by a new vertex
// with each neighbourhood, keep the lexicographically least relabelling.
std::vector<std::vector<Multigraph>> graph_classes(std::size_t max_n) {
  std::vector<std::vector<std::uint32_t>> classes(max_n + 1);
  classes[1] = {0};
  auto bit = [](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;  // colex pair index
  };
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<VertexId> perm(n);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId b = 1; b < n; ++b) {
      for (VertexId a = 0; a < b; ++a) pairs.emplace_back(a, b);
    }
    std::set<std::uint32_t> seen;
    for (const std::uint32_t base : classes[n - 1]) {
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        std::uint32_t g = base;
        for (VertexId a = 0; a + 1 < n; ++a) {
          if (nb >> a & 1u) g |= 1u << bit(a, static_cast<VertexId>(n - 1));
        }
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = g;
        do {
          std::uint32_t h = 0;
          for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (g >> i & 1u) h |= 1u << bit(perm[pairs[i].first], perm[pairs[i].second]);
          }
          best = std::min(best, h);
        } while (std::next_permutation(perm.begin(), perm.end()));
        seen.insert(best);
      }
    }
    classes[n].assign(seen.begin(), seen.end());
  }
  std::vector<std::vector<Multigraph>> out(max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const std::uint32_t mask : classes[n]) {
      std::vector<Edge> edges;
      for (VertexId b = 1; b < n; ++b) {
        for (VertexId a = 0; a < b; ++a) {
          if (mask >> (b * (b - 1) / 2 + a) & 1u) edges.push_back({a, b});
        }
      }
      Multigraph g(n, std::move(edges));
      if (connected_components(g).class_count == 1) out[n].push_back(std::move(g));
    }
  }
  return out;
}

// For |A| <= 4: removing A disconnects g iff some nonempty subset of A has
// an empty xor of uncompressed hashes. Hashes are edge bitmasks (m <= 21).
void xor_criterion(Outcome& r) {
  const auto classes = graph_classes(7);
  // Known counts of connected graphs up to isomorphism.
  constexpr std::array<std::size_t, 8> kConnected{0, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    if (classes[n].size() != kConnected[n]) {
      r.fail("enumerated " + std::to_string(classes[n].size()) + " graphs on " + std::to_string(n) +
             " vertices");
    }
  }
  std::size_t graphs = 0;
  std::size_t subsets = 0;
  for (const auto& level : classes) {
    for (const Multigraph& g : level) {
      ++graphs;
      const auto m = static_cast<EdgeId>(g.edge_count());
      for (VertexId root = 0; root < g.vertex_count(); ++root) {
        ++r.checked;
        const DfsStructure dfs = build_dfs(g, root);
        std::vector<std::uint32_t> h(m, 0);
        for (EdgeId e = 0; e < m; ++e) {
          for (const EdgeId b : oracle::uncompressed_hash(g, dfs, e)) h[e] |= 1u << b;
        }
        std::vector<EdgeId> a;
        bool bad = false;
        std::function<void(EdgeId)> grow = [&](EdgeId from) {
          if (!a.empty()) {
            ++subsets;
            bool empty_xor = false;
            for (std::uint32_t sub = 1; sub < (1u << a.size()) && !empty_xor; ++sub) {
              std::uint32_t acc = 0;
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (sub >> i & 1u) acc ^= h[a[i]];
              }
              empty_xor = acc == 0;
            }
            bad |= empty_xor != oracle::disconnects(g, a);
          }
          if (a.size() == 4) return;
          for (EdgeId e = from; e < m && !bad; ++e) {
            a.push_back(e);
            grow(e + 1);
            a.pop_back();
          }
        };
        grow(0);
        if (bad) r.fail("xor criterion on " + one_line(g) + " rooted at " + std::to_string(root));
      }
    }
  }
  r.notes.push_back("xor criterion: " + std::to_string(graphs) + " graphs, " + std::to_string(subsets) +
                    " edge sets");
}

Outcome primitives() {
  Outcome dsu, topk, xor_check;
  dsu_sequences(dsu);
  top_k_instances(topk);
  xor_criterion(xor_check);
  Outcome r;
  r.checked = dsu.checked + topk.checked + xor_check.checked;
  r.violations = dsu.violations + topk.violations + xor_check.violations;
  for (const Outcome* part : {&dsu, &topk, &xor_check}) {
    r.notes.insert(r.notes.end(), part->notes.begin(), part->notes.end());
  }
  return r;
}

// ---------------------------------------------------------------- 6

Outcome scaling() {
  Outcome r;
  constexpr double kMaxRatio = 2.4;
  for (const char* family : {"k4_chain", "three_cycles"}) {
    double previous = 0;
    double previous_dfs = 0;
    std::string line = std::string(family) + ":";
    std::string reference = std::string(family) + " build_dfs alone:";
    for (unsigned k = 16; k <= 20; ++k) {
      const Multigraph g = generate_sized(family, std::size_t{1} << k, 17);
      ++r.checked;
      // Best of several runs; fewer at the large end.
      const int reps = k <= 18 ? 7 : 4;
      double best = 1e300;
      for (int rep = 0; rep < reps; ++rep) {
        const auto start = Clock::now();
        const Labeling l = four_ecc(g);
        best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
        if (l.class_count == 0) r.fail("empty labeling");
      }
      // Reference point: one plain DFS over the same graph.
      double dfs_best = 1e300;
      for (int rep = 0; rep < reps; ++rep) {
        const auto start = Clock::now();
        const DfsStructure dfs = build_dfs(g, 0);
        dfs_best = std::min(dfs_best, std::chrono::duration<double>(Clock::now() - start).count());
      }
      if (previous_dfs > 0) {
        char ref[32];
        std::snprintf(ref, sizeof ref, " x%.2f", dfs_best / previous_dfs);
        reference += ref;
      }
      previous_dfs = dfs_best;
      const Enumeration en = enumerate_3cuts(g);
      for (std::size_t i = 1; i < en.levels.size(); ++i) {
        const std::size_t m = en.levels[i - 1].edges;
        if (en.levels[i].edges > (2 * m + 2) / 3) {
          r.fail(std::string(family) + " m=2^" + std::to_string(k) + ": level " + std::to_string(i) +
                 " has " + std::to_string(en.levels[i].edges) + " edges after " + std::to_string(m));
        }
      }
      if (en.cuts.size() + 1 > g.vertex_count()) {
        r.fail(std::string(family) + ": " + std::to_string(en.cuts.size()) + " cuts on " +
               std::to_string(g.vertex_count()) + " vertices");
      }
      char buf[96];
      std::snprintf(buf, sizeof buf, " m=%zu %.3fs", g.edge_count(), best);
      line += buf;
      if (previous > 0) {
        const double ratio = best / previous;
        std::snprintf(buf, sizeof buf, " (x%.2f)", ratio);
        line += buf;
        if (ratio > kMaxRatio) {
          r.fail(std::string(family) + ": time ratio" + buf + " at m=2^" + std::to_string(k));
        }
      }
      previous = best;
    }
    r.notes.push_back(line);
    r.notes.push_back(reference);
  }
  return r;
}

// ---------------------------------------------------------------- 7

Outcome reduction_suite() {
  Outcome r;
  Rng rng(0x2ecc);
  std::size_t aux_count = 0;
  while (r.checked < 1500) {
    const std::size_t n = 2 + rng.below(8);
    const Multigraph g = random_multigraph(n, n + rng.below(2 * n + 1), rng.next());
    if (!oracle::is_k_edge_connected(g, 2)) continue;
    ++r.checked;
    const Labeling labels = three_ecc_components(g, rng.next());
    if (labels != oracle::brute_partition(g, 3)) {
      r.fail("3ecc labels on " + one_line(g));
      continue;
    }
    const CactusOf2Cuts cactus = build_cactus(g, labels);
    bool bad = false;
    for (EdgeId e = 0; e < g.edge_count() && !bad; ++e) {
      for (EdgeId f = e + 1; f < g.edge_count() && !bad; ++f) {
        const EdgeId pair[2] = {e, f};
        const bool shared =
            cactus.cycle_of_edge[e] != kNoCycle && cactus.cycle_of_edge[e] == cactus.cycle_of_edge[f];
        bad = shared != oracle::disconnects(g, pair);
      }
    }
    if (bad) r.fail("2-cut characterization on " + one_line(g));
    for (const AuxGraph& aux : build_aux_graphs(g, labels, cactus)) {
      ++aux_count;
      if (!oracle::is_k_edge_connected(aux.graph, 3)) r.fail("aux graph not 3ecc, from " + one_line(g));
    }
  }
  r.notes.push_back(std::to_string(aux_count) + " aux graphs checked");
  return r;
}

}  // namespace
}  // namespace fourecc

int main() {
  using namespace fourecc;
  run(1, "four_ecc equals the brute-force partition", four_ecc_exhaustive);
  const auto corpus = three_ecc_corpus();
  run(2, "deterministic 3-cut enumeration equals brute force", [&] { return cut_enumeration(corpus); });
  run(3, "randomized and deterministic cut sets agree", randomized_agreement);
  run(4, "cut-tree structure", [&] { return cut_tree_structure(corpus); });
  run(5, "union-tree DSU, top-k paths, xor cut criterion", primitives);
  run(6, "near-linear scaling and recursion shrinkage", scaling);
  run(7, "cactus 2-cuts and 3ecc auxiliary graphs", reduction_suite);
  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
