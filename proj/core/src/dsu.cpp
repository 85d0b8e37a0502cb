#include "fourecc/dsu.hpp"

#include <numeric>
#include <stdexcept>

namespace fourecc {

AncestorIndex::AncestorIndex(const RootedTree& tree)
    : pre_(tree.size()), post_(tree.size()), depth_(tree.size(), 0) {
  const std::size_t n = tree.size();
  if (n == 0) return;
  // Children in CSR form, ordered by id.
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v != tree.root) ++offsets[tree.parent[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<VertexId> children(n > 0 ? n - 1 : 0);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (v != tree.root) children[cursor[tree.parent[v]]++] = v;
  }

  order_.reserve(n);
  std::uint32_t clock = 0;
  std::vector<std::pair<VertexId, std::uint32_t>> stack;
  stack.emplace_back(tree.root, offsets[tree.root]);
  pre_[tree.root] = ++clock;
  order_.push_back(tree.root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < offsets[v + 1]) {
      const VertexId c = children[next++];
      depth_[c] = depth_[v] + 1;
      pre_[c] = ++clock;
      order_.push_back(c);
      stack.emplace_back(c, offsets[c]);
    } else {
      post_[v] = ++clock;
      stack.pop_back();
    }
  }
  if (order_.size() != n) throw std::invalid_argument("parent links do not form a rooted tree");
}

UnionTreeDsu::UnionTreeDsu(const RootedTree& tree)
    : tree_(&tree), link_(tree.size()), size_(tree.size(), 1), top_(tree.size()) {
  std::iota(link_.begin(), link_.end(), VertexId{0});
  std::iota(top_.begin(), top_.end(), VertexId{0});
}

VertexId UnionTreeDsu::find(VertexId x) {
  VertexId root = x;
  while (link_[root] != root) root = link_[root];
  while (link_[x] != root) {
    const VertexId next = link_[x];
    link_[x] = root;
    x = next;
  }
  return root;
}

void UnionTreeDsu::unite(VertexId x, VertexId y) {
  if (!tree_->is_edge(x, y)) throw std::invalid_argument("union of a non-edge of the union tree");
  // Orient so that y is the parent; x's set then has x as its top.
  if (y != tree_->root && tree_->parent[y] == x) std::swap(x, y);
  VertexId a = find(x);
  VertexId b = find(y);
  if (a == b) return;
  const VertexId merged_top = top_[b];
  if (size_[a] > size_[b]) std::swap(a, b);
  link_[a] = b;
  size_[b] += size_[a];
  top_[b] = merged_top;
}

}  // namespace fourecc
