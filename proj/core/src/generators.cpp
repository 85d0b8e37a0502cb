#include "fourecc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fourecc {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Multigraph three_cycles(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("three_cycles needs n >= 2");
  Rng rng(seed);
  std::vector<VertexId> order(n);
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (int cycle = 0; cycle < 3; ++cycle) {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (std::size_t i = 0; i < n; ++i) edges.push_back({order[i], order[(i + 1) % n]});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph k4_chain(std::size_t n) {
  if (n == 0 || n % 4 != 0) throw std::invalid_argument("k4_chain needs n a positive multiple of 4");
  std::vector<Edge> edges;
  const std::size_t blocks = n / 4;
  edges.reserve(9 * blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto base = static_cast<VertexId>(4 * b);
    for (VertexId i = 0; i < 4; ++i) {
      for (VertexId j = i + 1; j < 4; ++j) edges.push_back({base + i, base + j});
    }
    if (b + 1 < blocks) {
      for (VertexId j = 1; j < 4; ++j) edges.push_back({base + j, base + 4 + j});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph random_multi(std::size_t n, unsigned d, std::uint64_t seed) {
  if ((n * d) % 2 != 0) throw std::invalid_argument("random_multi needs n*d even");
  Rng rng(seed);
  std::vector<VertexId> stubs;
  stubs.reserve(n * d);
  for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  rng.shuffle(stubs);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return Multigraph(n, std::move(edges));
}

Multigraph random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed, bool allow_loops) {
  if (n == 0 && m > 0) throw std::invalid_argument("edges need vertices");
  if (n == 1 && m > 0 && !allow_loops) throw std::invalid_argument("one vertex admits only loops");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    if (u == v && !allow_loops) continue;
    edges.push_back({u, v});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph generate(const std::string& family, std::size_t n, std::uint64_t seed, unsigned degree) {
  if (family == "three_cycles") return three_cycles(n, seed);
  if (family == "k4_chain") return k4_chain(n);
  if (family == "random_multi") return random_multi(n, degree, seed);
  throw std::invalid_argument("unknown family '" + family + "'");
}

Multigraph generate_sized(const std::string& family, std::size_t target_edges, std::uint64_t seed) {
  if (family == "k4_chain") {
    // m = 9b - 3 for b blocks.
    const std::size_t blocks = std::max<std::size_t>(1, (target_edges + 3 + 4) / 9);
    return k4_chain(4 * blocks);
  }
  if (family == "three_cycles") return three_cycles(std::max<std::size_t>(2, target_edges / 3), seed);
  if (family == "random_multi") {
    const std::size_t n = std::max<std::size_t>(2, (2 * target_edges / 3) & ~std::size_t{1});
    return random_multi(n, 3, seed);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace fourecc
