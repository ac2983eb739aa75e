#include "oddchi/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "oddchi/errors.hpp"

namespace oddchi {

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SimpleGraph g;
  g.adj.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw DomainError("invalid edge for simple graph");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

SimpleGraph SimpleGraph::from(const OddDistanceLatticeGraph& g) {
  return SimpleGraph{g.adjacency_lists()};
}

namespace {

// Saturation bookkeeping shared by the greedy and exact searches.
class ColoringState {
 public:
  explicit ColoringState(const SimpleGraph& g)
      : g_(g), color_(g.size(), -1), counts_(g.size(), std::vector<int>(g.size() + 1, 0)),
        saturation_(g.size(), 0), uncolored_degree_(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) uncolored_degree_[v] = g.adj[v].size();
  }

  bool allowed(std::size_t v, int c) const { return counts_[v][c] == 0; }
  int color(std::size_t v) const { return color_[v]; }
  const std::vector<int>& colors() const { return color_; }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (std::size_t w : g_.adj[v]) {
      if (counts_[w][c]++ == 0) ++saturation_[w];
      --uncolored_degree_[w];
    }
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    color_[v] = -1;
    for (std::size_t w : g_.adj[v]) {
      if (--counts_[w][c] == 0) --saturation_[w];
      ++uncolored_degree_[w];
    }
  }

  // Max saturation, then max uncolored degree, then lowest index.
  std::size_t pick() const {
    std::size_t best = g_.size();
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (color_[v] >= 0) continue;
      if (best == g_.size() || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && uncolored_degree_[v] > uncolored_degree_[best])) {
        best = v;
      }
    }
    return best;
  }

 private:
  const SimpleGraph& g_;
  std::vector<int> color_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> uncolored_degree_;
};

class BranchAndBound {
 public:
  BranchAndBound(const SimpleGraph& g, int lower, int upper)
      : g_(g), state_(g), lower_(lower), best_(upper) {}

  int solve(const std::vector<std::size_t>& clique) {
    // Clique vertices need distinct colors; fixing them to 0..q-1 removes
    // color-permutation symmetry.
    int used = 0;
    for (std::size_t v : clique) state_.assign(v, used++);
    search(clique.size(), used);
    return best_;
  }

 private:
  void search(std::size_t colored, int used) {
    if (best_ == lower_) return;
    if (colored == g_.size()) {
      best_ = used;
      return;
    }
    const std::size_t v = state_.pick();
    for (int c = 0; c <= used; ++c) {
      const int next_used = std::max(used, c + 1);
      if (next_used >= best_) break;
      if (!state_.allowed(v, c)) continue;
      state_.assign(v, c);
      search(colored + 1, next_used);
      state_.unassign(v);
      if (best_ == lower_) return;
    }
  }

  const SimpleGraph& g_;
  ColoringState state_;
  int lower_;
  int best_;
};

}  // namespace

std::vector<int> dsatur_coloring(const SimpleGraph& g) {
  ColoringState state(g);
  for (std::size_t step = 0; step < g.size(); ++step) {
    const std::size_t v = state.pick();
    int c = 0;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
  }
  return state.colors();
}

std::vector<std::size_t> greedy_clique(const SimpleGraph& g) {
  std::vector<std::size_t> best;
  for (std::size_t seed = 0; seed < g.size(); ++seed) {
    std::vector<std::size_t> clique{seed};
    std::vector<std::size_t> candidates = g.adj[seed];
    while (!candidates.empty()) {
      // Take the candidate with the most neighbours among the candidates.
      std::size_t pick = candidates.front();
      std::size_t pick_score = 0;
      for (std::size_t c : candidates) {
        std::size_t score = 0;
        for (std::size_t d : candidates) {
          if (std::binary_search(g.adj[c].begin(), g.adj[c].end(), d)) ++score;
        }
        if (score > pick_score) {
          pick = c;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      std::vector<std::size_t> next;
      for (std::size_t d : candidates) {
        if (d != pick && std::binary_search(g.adj[pick].begin(), g.adj[pick].end(), d)) {
          next.push_back(d);
        }
      }
      candidates = std::move(next);
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

bool is_proper_coloring(const SimpleGraph& g, const std::vector<int>& colors) {
  if (colors.size() != g.size()) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (colors[v] < 0) return false;
    for (std::size_t w : g.adj[v]) {
      if (colors[v] == colors[w]) return false;
    }
  }
  return true;
}

int exact_chromatic_number(const SimpleGraph& g, std::size_t vertex_cap) {
  if (g.size() > vertex_cap) {
    std::ostringstream msg;
    msg << "exact coloring refused: " << g.size() << " vertices exceeds cap " << vertex_cap;
    throw ResourceError(msg.str());
  }
  if (g.size() == 0) return 0;
  const auto greedy = dsatur_coloring(g);
  const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  const auto clique = greedy_clique(g);
  const int lower = static_cast<int>(clique.size());
  if (lower == upper) return upper;
  return BranchAndBound(g, lower, upper).solve(clique);
}

int exact_chromatic_number(const OddDistanceLatticeGraph& g, std::size_t vertex_cap) {
  return exact_chromatic_number(SimpleGraph::from(g), vertex_cap);
}

}  // namespace oddchi
