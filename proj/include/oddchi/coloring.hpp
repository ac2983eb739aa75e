#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oddchi/lattice_graph.hpp"

namespace oddchi {

// Undirected simple graph as sorted adjacency lists.
struct SimpleGraph {
  std::vector<std::vector<std::size_t>> adj;

  static SimpleGraph from_edges(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static SimpleGraph from(const OddDistanceLatticeGraph& g);
  std::size_t size() const { return adj.size(); }
};

inline constexpr std::size_t kDefaultColoringCap = 40;

// Greedy DSATUR coloring; colors are 0-based.
std::vector<int> dsatur_coloring(const SimpleGraph& g);

// Vertices of a clique grown greedily from each vertex; the largest found.
std::vector<std::size_t> greedy_clique(const SimpleGraph& g);

bool is_proper_coloring(const SimpleGraph& g, const std::vector<int>& colors);

/// Exact chromatic number by DSATUR branch and bound, seeded with a greedy
/// clique (lower bound) and the greedy DSATUR coloring (upper bound).
/// Throws ResourceError when the graph has more than vertex_cap vertices.
int exact_chromatic_number(const SimpleGraph& g, std::size_t vertex_cap = kDefaultColoringCap);
int exact_chromatic_number(const OddDistanceLatticeGraph& g,
                           std::size_t vertex_cap = kDefaultColoringCap);

}  // namespace oddchi
