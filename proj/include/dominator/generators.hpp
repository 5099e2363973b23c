#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dominator/error.hpp"
#include "dominator/graph.hpp"
#include "dominator/rng.hpp"

namespace dominator {

enum class GraphKind { heawood, petersen, cycle, complete, complete_bipartite, projective_incidence, random_regular };

/// What a generator knows about its own output. Recognizing these families
/// from an arbitrary graph is out of scope, so the tags travel alongside.
struct FamilyTags {
  bool projective_incidence = false;
  bool moore = false;
};

inline constexpr int kDefaultMaxRestarts = 10000;

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::parameter_out_of_range, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::parameter_out_of_range, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Parts are {0..s-1} and {s..s+t-1}.
inline Graph complete_bipartite_graph(int s, int t) {
  if (s < 1 || t < 1) throw Error(ErrorCode::parameter_out_of_range, "complete bipartite needs s, t >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = 0; v < t; ++v) edges.emplace_back(u, s + v);
  return Graph(s + t, std::move(edges));
}

/// LCF [5,-5]^7: a 14-cycle with each even vertex i joined to i+5.
inline Graph heawood_graph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 14; ++v) {
    edges.emplace_back(v, (v + 1) % 14);
    if (v % 2 == 0) edges.emplace_back(v, (v + 5) % 14);
  }
  return Graph(14, std::move(edges));
}

/// Outer 5-cycle 0..4, spokes i–i+5, inner pentagram on 5..9.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Point/line incidence graph of PG(2,q) over the prime field Z_q.
/// Vertices 0..m-1 are points and m..2m-1 are lines, m = q^2+q+1; both are
/// normalized homogeneous triples (first nonzero coordinate 1), and a point
/// lies on a line when their dot product vanishes mod q.
inline Graph projective_incidence_graph(int q) {
  if (!is_prime(q)) throw Error(ErrorCode::q_not_prime, std::to_string(q) + " is not prime");
  std::vector<std::array<int, 3>> reps;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) reps.push_back({x, y, z});
      }
  const int m = static_cast<int>(reps.size());
  std::vector<Edge> edges;
  for (int p = 0; p < m; ++p) {
    for (int l = 0; l < m; ++l) {
      const long dot = static_cast<long>(reps[p][0]) * reps[l][0] + static_cast<long>(reps[p][1]) * reps[l][1] +
                       static_cast<long>(reps[p][2]) * reps[l][2];
      if (dot % q == 0) edges.emplace_back(p, m + l);
    }
  }
  return Graph(2 * m, std::move(edges));
}

/// Random r-regular graph from stub pairing. Each round shuffles the open
/// stubs and keeps every pair that forms a new simple edge; leftover stubs go
/// into the next round. A round with no usable pair left restarts from
/// scratch, and `max_restarts` restarts raise generation-retry-limit.
inline Graph random_regular_graph(int n, int r, std::uint64_t seed, int max_restarts = kDefaultMaxRestarts) {
  if (n < 1 || r < 0 || r >= n || (static_cast<long>(n) * r) % 2 != 0) {
    throw Error(ErrorCode::infeasible_degree,
                "no simple " + std::to_string(r) + "-regular graph on " + std::to_string(n) + " vertices");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::set<Edge> edges;
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * r);
    for (Vertex v = 0; v < n; ++v)
      for (int k = 0; k < r; ++k) stubs.push_back(v);

    bool stuck = false;
    while (!stubs.empty()) {
      rng.shuffle(std::span<Vertex>(stubs));
      std::map<Vertex, int> leftover;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        Vertex u = stubs[i], v = stubs[i + 1];
        if (u != v && !edges.contains(make_edge(u, v))) {
          edges.insert(make_edge(u, v));
        } else {
          ++leftover[u];
          ++leftover[v];
        }
      }
      if (leftover.empty()) break;
      bool usable = false;
      for (auto it = leftover.begin(); it != leftover.end() && !usable; ++it) {
        for (auto jt = std::next(it); jt != leftover.end(); ++jt) {
          if (!edges.contains(make_edge(it->first, jt->first))) {
            usable = true;
            break;
          }
        }
      }
      if (!usable) {
        stuck = true;
        break;
      }
      stubs.clear();
      for (const auto& [v, count] : leftover) stubs.insert(stubs.end(), static_cast<std::size_t>(count), v);
    }
    if (!stuck) return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  }
  throw Error(ErrorCode::generation_retry_limit,
              "random_regular(" + std::to_string(n) + "," + std::to_string(r) + ") exceeded " +
                  std::to_string(max_restarts) + " restarts");
}

inline std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "heawood") return GraphKind::heawood;
  if (name == "petersen") return GraphKind::petersen;
  if (name == "cycle") return GraphKind::cycle;
  if (name == "complete") return GraphKind::complete;
  if (name == "complete_bipartite") return GraphKind::complete_bipartite;
  if (name == "projective_incidence") return GraphKind::projective_incidence;
  if (name == "random_regular") return GraphKind::random_regular;
  return std::nullopt;
}

/// Number of integer parameters each kind takes.
inline std::size_t param_count(GraphKind kind) {
  switch (kind) {
    case GraphKind::heawood:
    case GraphKind::petersen: return 0;
    case GraphKind::cycle:
    case GraphKind::complete:
    case GraphKind::projective_incidence: return 1;
    case GraphKind::complete_bipartite:
    case GraphKind::random_regular: return 2;
  }
  return 0;
}

struct Generated {
  Graph graph;
  FamilyTags tags;
};

/// Single entry point over every family; `params` are positional in the
/// order of the named constructor above. random_regular requires a seed.
inline Generated generate(GraphKind kind, std::span<const int> params, std::optional<std::uint64_t> seed = {}) {
  if (params.size() != param_count(kind)) {
    throw Error(ErrorCode::parameter_out_of_range, "expected " + std::to_string(param_count(kind)) +
                                                       " parameters, got " + std::to_string(params.size()));
  }
  switch (kind) {
    case GraphKind::heawood: return {heawood_graph(), {.projective_incidence = true}};
    case GraphKind::petersen: return {petersen_graph(), {.moore = true}};
    case GraphKind::cycle: return {cycle_graph(params[0]), {.moore = params[0] == 5}};
    case GraphKind::complete: return {complete_graph(params[0]), {}};
    case GraphKind::complete_bipartite: return {complete_bipartite_graph(params[0], params[1]), {}};
    case GraphKind::projective_incidence:
      return {projective_incidence_graph(params[0]), {.projective_incidence = true}};
    case GraphKind::random_regular:
      if (!seed) throw Error(ErrorCode::parameter_out_of_range, "random_regular requires a seed");
      return {random_regular_graph(params[0], params[1], *seed), {}};
  }
  throw Error(ErrorCode::parameter_out_of_range, "unknown graph kind");
}

}  // namespace dominator
