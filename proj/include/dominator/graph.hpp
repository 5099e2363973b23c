#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dominator/error.hpp"

namespace dominator {

using Vertex = int;

/// Unordered pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Sorted list of distinct vertices.
using VertexSet = std::vector<Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on the dense vertex set {0, ..., n-1}.
/// Immutable once constructed; adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  /// Throws Error on self-loops, duplicates, or endpoints outside [0, n).
  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw Error(ErrorCode::parameter_out_of_range, "negative vertex count");
    for (auto& e : edges) {
      if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
        throw Error(ErrorCode::endpoint_out_of_range,
                    "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        "} outside [0," + std::to_string(n) + ")");
      }
      if (e.first == e.second) {
        throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(e.first));
      }
      e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
      throw Error(ErrorCode::duplicate_edge, "duplicate edge {" + std::to_string(dup->first) +
                                                 "," + std::to_string(dup->second) + "}");
    }
    for (const auto& [u, v] : edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }

  int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degree_sequence;
  bool is_regular = false;
  std::optional<int> regular_degree;
};

inline DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::empty_graph, "degree profile of a graph with no vertices");
  DegreeProfile p;
  p.degree_sequence.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) p.degree_sequence.push_back(g.degree(v));
  auto [lo, hi] = std::minmax_element(p.degree_sequence.begin(), p.degree_sequence.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  p.is_regular = p.min_degree == p.max_degree;
  if (p.is_regular) p.regular_degree = p.min_degree;
  return p;
}

inline int min_degree(const Graph& g) { return degree_profile(g).min_degree; }

/// Two-coloring of g if it is bipartite.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          frontier.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

/// Length of a shortest cycle, or nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          frontier.push(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// Number of neighbors of v flagged in `in_set`.
inline int count_neighbors_in(const Graph& g, Vertex v, std::span<const char> in_set) {
  int count = 0;
  for (Vertex w : g.neighbors(v)) count += in_set[w] ? 1 : 0;
  return count;
}

/// Membership mask over {0..n-1} for a vertex list; throws on out-of-range members.
inline std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : set) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(v) + " not in graph of order " +
                                                      std::to_string(g.order()));
    }
    mask[v] = 1;
  }
  return mask;
}

inline VertexSet complement(int n, std::span<const Vertex> set) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : set) in[v] = 1;
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace dominator
