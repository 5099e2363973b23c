#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dominator/error.hpp"
#include "dominator/exact.hpp"
#include "dominator/graph.hpp"
#include "dominator/matching.hpp"
#include "dominator/rational.hpp"
#include "dominator/rng.hpp"

// Auxiliary-graph constructions. Each base vertex v picks some neighbors and
// adds "gadget" edges among them (and, for a < b, edges at v itself) so that
// an independent set A of the auxiliary graph can never swallow more than the
// allowed number of v's neighbors. V \ A is then (a,b)-dominating, and since
// the auxiliary graph has at most alpha*n edges, a Caro-Wei greedy pass finds
// |A| >= n / (2*alpha + 1).

namespace dominator {

enum class StrategyKind {
  tt22_min3,
  tt22_min4,
  kk_clique,
  kk_matching,
  kk_partition,
  tt22_mixed,
  ab_general,
  ab_spanning,
};

constexpr std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::tt22_min3: return "tt22_min3";
    case StrategyKind::tt22_min4: return "tt22_min4";
    case StrategyKind::kk_clique: return "kk_clique";
    case StrategyKind::kk_matching: return "kk_matching";
    case StrategyKind::kk_partition: return "kk_partition";
    case StrategyKind::tt22_mixed: return "tt22_mixed";
    case StrategyKind::ab_general: return "ab_general";
    case StrategyKind::ab_spanning: return "ab_spanning";
  }
  return "unknown";
}

inline std::optional<StrategyKind> parse_strategy_kind(std::string_view name) {
  for (auto kind : {StrategyKind::tt22_min3, StrategyKind::tt22_min4, StrategyKind::kk_clique,
                    StrategyKind::kk_matching, StrategyKind::kk_partition, StrategyKind::tt22_mixed,
                    StrategyKind::ab_general, StrategyKind::ab_spanning}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

/// How a vertex picks which of its neighbors take part in its gadget.
struct Chooser {
  enum class Kind { lowest_index, seeded_random } kind = Kind::lowest_index;
  std::uint64_t seed = 0;

  static Chooser lowest_index() { return {}; }
  static Chooser seeded_random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
};

struct Strategy {
  StrategyKind kind = StrategyKind::tt22_min3;
  int k = 0;
  int d = 0;
  int a = 0;
  int b = 0;
  /// (b-a)-regular spanning subgraph for ab_spanning; found as a perfect
  /// matching when absent and b - a == 1.
  std::optional<Graph> subgraph = std::nullopt;
  Chooser chooser = {};

  static Strategy tt22_min3(Chooser c = {}) { return {.kind = StrategyKind::tt22_min3, .chooser = c}; }
  static Strategy tt22_min4(Chooser c = {}) { return {.kind = StrategyKind::tt22_min4, .chooser = c}; }
  static Strategy tt22_mixed(Chooser c = {}) { return {.kind = StrategyKind::tt22_mixed, .chooser = c}; }
  static Strategy kk_clique(int k, Chooser c = {}) { return {.kind = StrategyKind::kk_clique, .k = k, .chooser = c}; }
  static Strategy kk_matching(int k, Chooser c = {}) {
    return {.kind = StrategyKind::kk_matching, .k = k, .chooser = c};
  }
  static Strategy kk_partition(int k, int d, Chooser c = {}) {
    return {.kind = StrategyKind::kk_partition, .k = k, .d = d, .chooser = c};
  }
  static Strategy ab_general(int a, int b, Chooser c = {}) {
    return {.kind = StrategyKind::ab_general, .a = a, .b = b, .chooser = c};
  }
  static Strategy ab_spanning(int a, int b, std::optional<Graph> subgraph = {}, Chooser c = {}) {
    return {.kind = StrategyKind::ab_spanning, .a = a, .b = b, .subgraph = std::move(subgraph), .chooser = c};
  }

  /// The (a,b) pair this construction certifies.
  std::pair<int, int> target() const {
    switch (kind) {
      case StrategyKind::tt22_min3:
      case StrategyKind::tt22_min4:
      case StrategyKind::tt22_mixed: return {2, 2};
      case StrategyKind::kk_clique:
      case StrategyKind::kk_matching:
      case StrategyKind::kk_partition: return {k, k};
      case StrategyKind::ab_general:
      case StrategyKind::ab_spanning: return {a, b};
    }
    return {0, 0};
  }
};

struct AuxGraph {
  int base_n = 0;
  /// Collapsed (simple) auxiliary graph on the base vertex set.
  Graph graph;
  /// Edges contributed on behalf of each base vertex, with repeats across vertices.
  std::vector<std::vector<Edge>> gadget_log;
  /// Neighbors each base vertex picked, in pairing order.
  std::vector<std::vector<Vertex>> chosen;
  /// Per-theorem edge budget alpha: contributed edges <= alpha * n.
  Rational edge_budget;

  std::size_t contributed_edges() const {
    std::size_t total = 0;
    for (const auto& log : gadget_log) total += log.size();
    return total;
  }
};

/// Edges per vertex for kk_partition: k+1+d neighbors split into d+1 parts
/// whose sizes differ by at most one, each part a clique.
inline long long partition_edge_count(int k, int d) {
  const long long picked = k + 1 + d;
  const long long parts = d + 1;
  const long long q = picked / parts;
  const long long big = picked % parts;
  return big * (q + 1) * q / 2 + (parts - big) * q * (q - 1) / 2;
}

/// k(k+d+1) / (2d+2). Equals partition_edge_count when d+1 divides k and
/// is strictly smaller otherwise (balanced parts minimize the clique edges,
/// so this is a lower bound on them, not an upper one).
inline Rational partition_formula_budget(int k, int d) {
  return make_rational(static_cast<long long>(k) * (k + d + 1), 2 * d + 2);
}

/// The closed form printed with the partition theorem,
/// (2d + (k-d)(k-d+1)) / (2d + (k-d)(k-d+1) + 1). It does not agree with
/// either budget above; certificates use partition_edge_count and report
/// this alongside.
inline Rational partition_printed_bound(int k, int d) {
  const long long t = 2LL * d + static_cast<long long>(k - d) * (k - d + 1);
  return make_rational(t, t + 1);
}

/// 2*alpha / (2*alpha + 1): fraction of n left after removing a Caro-Wei set.
inline Rational turan_fraction(const Rational& alpha) { return 2 * alpha / (2 * alpha + 1); }

/// n - ceil(n / (2*alpha + 1)).
inline long long turan_size_bound(const Rational& alpha, int n) {
  const Rational denom = 2 * alpha + 1;
  return n - static_cast<long long>(ceil_div(BigInt(n) * denominator(denom), numerator(denom)));
}

namespace detail {

class AuxBuilder {
 public:
  AuxBuilder(const Graph& g, const Chooser& chooser)
      : g_(g), rng_(chooser.seed), random_(chooser.kind == Chooser::Kind::seeded_random) {
    aux_.base_n = g.order();
    aux_.gadget_log.resize(static_cast<std::size_t>(g.order()));
    aux_.chosen.resize(static_cast<std::size_t>(g.order()));
  }

  /// Picks `count` neighbors of v not in `exclude`.
  std::vector<Vertex> choose(Vertex v, int count, const std::vector<Vertex>& exclude = {}) {
    std::vector<Vertex> pool;
    for (Vertex w : g_.neighbors(v))
      if (std::find(exclude.begin(), exclude.end(), w) == exclude.end()) pool.push_back(w);
    if (static_cast<int>(pool.size()) < count) {
      throw Error(ErrorCode::degree_too_small, "vertex " + std::to_string(v) + " has " +
                                                   std::to_string(pool.size()) + " eligible neighbors, needs " +
                                                   std::to_string(count));
    }
    if (random_) rng_.shuffle(std::span<Vertex>(pool));
    pool.resize(static_cast<std::size_t>(count));
    auto& record = aux_.chosen[v];
    record.insert(record.end(), pool.begin(), pool.end());
    return pool;
  }

  void add(Vertex owner, Vertex x, Vertex y) { aux_.gadget_log[owner].push_back(make_edge(x, y)); }

  void clique(Vertex owner, std::span<const Vertex> part) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j) add(owner, part[i], part[j]);
  }

  void pairs(Vertex owner, std::span<const Vertex> picked) {
    for (std::size_t i = 0; i + 1 < picked.size(); i += 2) add(owner, picked[i], picked[i + 1]);
  }

  AuxGraph finish(Rational budget) {
    std::set<Edge> simple;
    for (const auto& log : aux_.gadget_log) simple.insert(log.begin(), log.end());
    aux_.graph = Graph(aux_.base_n, std::vector<Edge>(simple.begin(), simple.end()));
    aux_.edge_budget = std::move(budget);
    if (Rational(static_cast<long long>(aux_.contributed_edges())) > aux_.edge_budget * aux_.base_n) {
      throw Error(ErrorCode::verification_failed, "auxiliary graph exceeds its edge budget");
    }
    return std::move(aux_);
  }

 private:
  const Graph& g_;
  Rng rng_;
  bool random_;
  AuxGraph aux_;
};

inline void require_min_degree(const Graph& g, int needed, std::string_view why) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < needed) {
      throw Error(ErrorCode::degree_too_small, "vertex " + std::to_string(v) + " has degree " +
                                                   std::to_string(g.degree(v)) + ", " + std::string(why) +
                                                   " needs " + std::to_string(needed));
    }
  }
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::parameter_out_of_range, msg);
}

/// The (b-a)-regular spanning subgraph used by ab_spanning, validated.
inline Graph spanning_subgraph(const Graph& g, const Strategy& s) {
  const int degree = s.b - s.a;
  if (!s.subgraph) {
    if (degree == 1) {
      auto matching = find_perfect_matching(g);
      if (matching.outcome == MatchingOutcome::found) return Graph(g.order(), std::move(matching.edges));
    }
    throw Error(ErrorCode::missing_spanning_subgraph,
                "no " + std::to_string(degree) + "-regular spanning subgraph supplied or found");
  }
  const Graph& h = *s.subgraph;
  bool ok = h.order() == g.order();
  for (Vertex v = 0; ok && v < h.order(); ++v) ok = h.degree(v) == degree;
  for (const auto& [u, v] : h.edges()) ok = ok && g.has_edge(u, v);
  if (!ok) {
    throw Error(ErrorCode::missing_spanning_subgraph,
                "supplied subgraph is not a " + std::to_string(degree) + "-regular spanning subgraph of the graph");
  }
  return h;
}

}  // namespace detail

inline AuxGraph build_aux(const Graph& g, const Strategy& s) {
  using detail::require;
  using detail::require_min_degree;
  const int n = g.order();
  detail::AuxBuilder builder(g, s.chooser);

  switch (s.kind) {
    case StrategyKind::tt22_min3: {
      require_min_degree(g, 3, "tt22_min3");
      for (Vertex v = 0; v < n; ++v) builder.clique(v, builder.choose(v, 3));
      return builder.finish(make_rational(3));
    }
    case StrategyKind::tt22_min4: {
      require_min_degree(g, 4, "tt22_min4");
      for (Vertex v = 0; v < n; ++v) builder.pairs(v, builder.choose(v, 4));
      return builder.finish(make_rational(2));
    }
    case StrategyKind::kk_clique: {
      require(s.k >= 1, "kk_clique needs k >= 1");
      require_min_degree(g, s.k + 1, "kk_clique");
      for (Vertex v = 0; v < n; ++v) builder.clique(v, builder.choose(v, s.k + 1));
      return builder.finish(make_rational(static_cast<long long>(s.k) * (s.k + 1), 2));
    }
    case StrategyKind::kk_matching: {
      require(s.k >= 1, "kk_matching needs k >= 1");
      require_min_degree(g, 2 * s.k, "kk_matching");
      for (Vertex v = 0; v < n; ++v) builder.pairs(v, builder.choose(v, 2 * s.k));
      return builder.finish(make_rational(s.k));
    }
    case StrategyKind::kk_partition: {
      require(s.k >= 1 && s.d >= 0 && s.d <= s.k - 1, "kk_partition needs k >= 1 and 0 <= d <= k-1");
      const int picked = s.k + 1 + s.d;
      const int parts = s.d + 1;
      require_min_degree(g, picked, "kk_partition");
      for (Vertex v = 0; v < n; ++v) {
        const auto chosen = builder.choose(v, picked);
        std::span<const Vertex> rest(chosen);
        for (int p = 0; p < parts; ++p) {
          const auto size = static_cast<std::size_t>(picked / parts + (p < picked % parts ? 1 : 0));
          builder.clique(v, rest.first(size));
          rest = rest.subspan(size);
        }
      }
      return builder.finish(make_rational(partition_edge_count(s.k, s.d)));
    }
    case StrategyKind::tt22_mixed: {
      require_min_degree(g, 3, "tt22_mixed");
      int high = 0;
      for (Vertex v = 0; v < n; ++v) high += g.degree(v) >= 4 ? 1 : 0;
      if (2 * high < n) {
        throw Error(ErrorCode::degree_too_small,
                    std::to_string(high) + " of " + std::to_string(n) + " vertices have degree >= 4; tt22_mixed needs half");
      }
      for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 3) {
          builder.clique(v, builder.choose(v, 3));
        } else {
          builder.pairs(v, builder.choose(v, 4));
        }
      }
      return builder.finish(make_rational(5, 2));
    }
    case StrategyKind::ab_general: {
      require(s.a >= 1 && s.a < s.b, "ab_general needs 1 <= a < b");
      require_min_degree(g, s.a + s.b, "ab_general");
      for (Vertex v = 0; v < n; ++v) {
        const auto paired = builder.choose(v, 2 * s.a);
        builder.pairs(v, paired);
        int added = 0;
        for (Vertex w : g.neighbors(v)) {
          if (added == s.b - s.a) break;
          if (std::find(paired.begin(), paired.end(), w) != paired.end()) continue;
          builder.add(v, v, w);
          ++added;
        }
        if (added < s.b - s.a) {
          throw Error(ErrorCode::not_enough_distinct_endpoints,
                      "vertex " + std::to_string(v) + " lacks " + std::to_string(s.b - s.a) + " spare neighbors");
        }
      }
      return builder.finish(make_rational(s.b));
    }
    case StrategyKind::ab_spanning: {
      require(s.a >= 1 && s.a < s.b, "ab_spanning needs 1 <= a < b");
      require_min_degree(g, s.a + s.b, "ab_spanning");
      const Graph h = detail::spanning_subgraph(g, s);
      for (Vertex v = 0; v < n; ++v) {
        const std::vector<Vertex> own(h.neighbors(v).begin(), h.neighbors(v).end());
        builder.pairs(v, builder.choose(v, 2 * s.a, own));
        // Each spanning edge is charged once, to its lower endpoint.
        for (Vertex w : own)
          if (v < w) builder.add(v, v, w);
      }
      return builder.finish(make_rational(s.a + s.b, 2));
    }
  }
  throw Error(ErrorCode::parameter_out_of_range, "unknown strategy");
}

/// Min-degree greedy independent set (ties to the lowest index). Its size is
/// at least sum over v of 1/(deg(v)+1).
inline VertexSet greedy_independent_set(const Graph& h) {
  const int n = h.order();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = h.degree(v);
    queue.emplace(degree[v], v);
  }
  auto remove = [&](Vertex v) {
    queue.erase({degree[v], v});
    alive[v] = 0;
    for (Vertex w : h.neighbors(v)) {
      if (!alive[w]) continue;
      queue.erase({degree[w], w});
      --degree[w];
      queue.emplace(degree[w], w);
    }
  };
  VertexSet picked;
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    picked.push_back(v);
    std::vector<Vertex> doomed;
    for (Vertex w : h.neighbors(v))
      if (alive[w]) doomed.push_back(w);
    remove(v);
    for (Vertex w : doomed) remove(w);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

inline VertexSet greedy_independent_set(const AuxGraph& aux) { return greedy_independent_set(aux.graph); }

enum class Extractor { greedy, exact };

struct TuranResult {
  AuxGraph aux;
  VertexSet independent;
  DominationCertificate certificate;
  /// n - ceil(n / (2*alpha + 1)), asserted against the certificate size.
  long long size_bound = 0;
  /// Set for kk_partition only: the k(k+d+1)/(2d+2) budget and the
  /// theorem's printed closed form, for comparison with the certified one.
  std::optional<Rational> formula_budget;
  std::optional<Rational> printed_bound;
};

/// Complement of a large independent set of the auxiliary graph, verified as
/// (a,b)-dominating and checked against the theorem bound 2a/(2a+1) * n.
inline TuranResult turan_dominating_set(const Graph& g, const Strategy& s, Extractor extractor = Extractor::greedy) {
  TuranResult result;
  result.aux = build_aux(g, s);
  result.independent = extractor == Extractor::exact ? independence_number_exact(result.aux.graph).witness
                                                     : greedy_independent_set(result.aux);
  const auto [a, b] = s.target();
  const Rational fraction = turan_fraction(result.aux.edge_budget);
  result.size_bound = turan_size_bound(result.aux.edge_budget, g.order());
  result.certificate = certify(g, complement(g.order(), result.independent), a, b, Method::turan, fraction);
  if (static_cast<long long>(result.certificate.set.size()) > result.size_bound) {
    throw Error(ErrorCode::verification_failed, "certificate of size " + std::to_string(result.certificate.set.size()) +
                                                    " exceeds n - ceil(n/(2*alpha+1)) = " +
                                                    std::to_string(result.size_bound));
  }
  if (s.kind == StrategyKind::kk_partition) {
    result.formula_budget = partition_formula_budget(s.k, s.d);
    result.printed_bound = partition_printed_bound(s.k, s.d);
  }
  return result;
}

}  // namespace dominator
