#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fourecc/graph.hpp"
#include "fourecc/hashing.hpp"

namespace fourecc {

/// Seeded random source with its own bounded draw and shuffle, so that
/// generated graphs are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : mix_(seed) {}
  std::uint64_t next() { return mix_.next(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  SplitMix64 mix_;
};

/// Union of three random Hamiltonian cycles on n >= 2 vertices: m = 3n.
Multigraph three_cycles(std::size_t n, std::uint64_t seed);

/// n/4 copies of K4 in a row, consecutive copies joined by the three edges
/// (4i+j, 4(i+1)+j), j = 1..3. n must be a positive multiple of 4.
Multigraph k4_chain(std::size_t n);

/// Configuration-model d-regular multigraph (loops and parallel edges kept).
/// n*d must be even.
Multigraph random_multi(std::size_t n, unsigned d, std::uint64_t seed);

/// m edges with independently uniform endpoints; loops only if allowed.
Multigraph random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed,
                             bool allow_loops = false);

/// Dispatch by family name ("three_cycles", "k4_chain", "random_multi").
/// Throws std::invalid_argument for an unknown family or bad size.
Multigraph generate(const std::string& family, std::size_t n, std::uint64_t seed, unsigned degree = 3);

/// An instance of `family` with about `target_edges` edges (never fewer
/// than the family's smallest instance); random_multi uses degree 3.
Multigraph generate_sized(const std::string& family, std::size_t target_edges, std::uint64_t seed);

}  // namespace fourecc
