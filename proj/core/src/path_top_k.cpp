#include "fourecc/path_top_k.hpp"

#include <stdexcept>

namespace fourecc {

class PathTopKSolver {
 public:
  PathTopKSolver(const RootedTree& tree, const AncestorIndex& index, std::size_t k)
      : tree_(tree), index_(index), dsu_(tree), out_(tree.size(), k) {}

  // Climbs from `from` toward LCA(from, to), recording path i on every
  // uncontracted edge and contracting edges whose list fills up.
  void go(VertexId from, VertexId to, std::uint32_t i) {
    VertexId u = dsu_.lowest(from);
    while (!index_.is_ancestor(u, to)) {
      ++out_.loop_iterations;
      const VertexId up = tree_.parent[u];
      auto& count = out_.count_[u];
      out_.slots_[u * out_.k_ + count] = i;
      if (++count == out_.k_) dsu_.unite(u, up);
      u = dsu_.lowest(up);
    }
  }

  TopKCover finish() { return std::move(out_); }

 private:
  const RootedTree& tree_;
  const AncestorIndex& index_;
  UnionTreeDsu dsu_;
  TopKCover out_;
};

TopKCover top_k_min_paths(const RootedTree& tree, std::span<const WeightedPath> paths,
                          std::size_t k, std::uint32_t max_weight) {
  const AncestorIndex index(tree);
  return top_k_min_paths(tree, index, paths, k, max_weight);
}

TopKCover top_k_min_paths(const RootedTree& tree, const AncestorIndex& index,
                          std::span<const WeightedPath> paths, std::size_t k,
                          std::uint32_t max_weight) {
  if (k == 0 || k > 255) throw std::invalid_argument("k must be in [1, 255]");
  const std::size_t n = tree.size();
  // Counting sort by weight, stable in path index.
  std::vector<std::uint32_t> bucket(std::size_t{max_weight} + 2, 0);
  for (const auto& p : paths) {
    if (p.weight > max_weight) throw std::invalid_argument("path weight exceeds max_weight");
    if (p.u >= n || p.v >= n) throw std::invalid_argument("path endpoint is not a tree vertex");
    ++bucket[p.weight + 1];
  }
  for (std::size_t w = 1; w < bucket.size(); ++w) bucket[w] += bucket[w - 1];
  std::vector<std::uint32_t> order(paths.size());
  for (std::uint32_t i = 0; i < paths.size(); ++i) order[bucket[paths[i].weight]++] = i;

  PathTopKSolver solver(tree, index, k);
  for (const std::uint32_t i : order) {
    solver.go(paths[i].u, paths[i].v, i);
    solver.go(paths[i].v, paths[i].u, i);
  }
  return solver.finish();
}

}  // namespace fourecc
