#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "dominator/graph.hpp"
#include "dominator/rng.hpp"

namespace dominator {

enum class MatchingOutcome {
  found,
  /// Proven absent (odd order, or a bipartite graph with no perfect matching).
  nonexistent,
  /// Randomized search on a non-bipartite graph gave up; inconclusive.
  not_found,
};

struct MatchingResult {
  MatchingOutcome outcome = MatchingOutcome::not_found;
  std::vector<Edge> edges;
};

inline bool is_perfect_matching(const Graph& g, std::span<const Edge> edges) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [u, v] : edges) {
    if (!g.has_edge(u, v) || covered[u] || covered[v]) return false;
    covered[u] = covered[v] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace detail {

inline std::vector<Edge> mate_to_edges(std::span<const Vertex> mate) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  return edges;
}

/// Kuhn's augmenting-path matching from the side-0 vertices.
inline std::vector<Vertex> bipartite_maximum_matching(const Graph& g, std::span<const int> side) {
  const int n = g.order();
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  std::vector<int> visited(static_cast<std::size_t>(n), -1);
  std::function<bool(Vertex, int)> augment = [&](Vertex u, int stamp) -> bool {
    for (Vertex w : g.neighbors(u)) {
      if (visited[w] == stamp) continue;
      visited[w] = stamp;
      if (mate[w] == -1 || augment(mate[w], stamp)) {
        mate[u] = w;
        mate[w] = u;
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (side[u] == 0 && mate[u] == -1) augment(u, u);
  }
  return mate;
}

/// Random-order greedy maximal matching improved by length-3 augmenting
/// paths u - x = y - w (u, w free; x, y matched) until none remain.
inline std::vector<Vertex> randomized_matching(const Graph& g, Rng& rng) {
  const int n = g.order();
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<Vertex>(order));
  for (Vertex u : order) {
    if (mate[u] != -1) continue;
    std::vector<Vertex> free_nbrs;
    for (Vertex w : g.neighbors(u))
      if (mate[w] == -1) free_nbrs.push_back(w);
    if (free_nbrs.empty()) continue;
    Vertex w = free_nbrs[rng.uniform(free_nbrs.size())];
    mate[u] = w;
    mate[w] = u;
  }
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex u : order) {
      if (mate[u] != -1) continue;
      for (Vertex x : g.neighbors(u)) {
        const Vertex y = mate[x];
        if (y == -1) continue;
        for (Vertex w : g.neighbors(y)) {
          if (w == u || mate[w] != -1) continue;
          mate[u] = x;
          mate[x] = u;
          mate[y] = w;
          mate[w] = y;
          improved = true;
          break;
        }
        if (mate[u] != -1) break;
      }
    }
  }
  return mate;
}

}  // namespace detail

/// Exact for bipartite graphs. Otherwise a bounded number of randomized
/// attempts; a miss is reported as not_found rather than nonexistent.
inline MatchingResult find_perfect_matching(const Graph& g, std::uint64_t seed = 1, int max_attempts = 64) {
  if (g.order() % 2 != 0) return {MatchingOutcome::nonexistent, {}};
  if (auto side = bipartition(g)) {
    auto mate = detail::bipartite_maximum_matching(g, *side);
    auto edges = detail::mate_to_edges(mate);
    if (2 * static_cast<int>(edges.size()) == g.order()) return {MatchingOutcome::found, std::move(edges)};
    return {MatchingOutcome::nonexistent, {}};
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto edges = detail::mate_to_edges(detail::randomized_matching(g, rng));
    if (2 * static_cast<int>(edges.size()) == g.order()) return {MatchingOutcome::found, std::move(edges)};
  }
  return {MatchingOutcome::not_found, {}};
}

}  // namespace dominator
