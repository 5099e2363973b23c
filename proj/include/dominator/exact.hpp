#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dominator/error.hpp"
#include "dominator/graph.hpp"
#include "dominator/rational.hpp"

namespace dominator {

/// True iff every member of S has >= a neighbors in S and every non-member
/// has >= b neighbors in S.
inline bool is_ab_dominating(const Graph& g, std::span<const Vertex> s, int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::parameter_out_of_range, "a and b must be positive");
  const auto in = membership(g, s);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (count_neighbors_in(g, v, in) < (in[v] ? a : b)) return false;
  }
  return true;
}

enum class Method { exact, turan, lll, external };

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::turan: return "turan";
    case Method::lll: return "lll";
    case Method::external: return "external";
  }
  return "unknown";
}

struct DominationCertificate {
  VertexSet set;
  int a = 1;
  int b = 1;
  bool verified = false;
  /// Fraction of n the set was certified against.
  std::optional<Rational> claimed_bound;
  Method method = Method::external;
};

/// Verifies `set` on g and, when a bound is claimed, that |set| <= ceil(bound * n).
/// Throws verification-failed otherwise; a returned certificate is always verified.
inline DominationCertificate certify(const Graph& g, VertexSet set, int a, int b, Method method,
                                     std::optional<Rational> claimed_bound = {}) {
  std::sort(set.begin(), set.end());
  if (!is_ab_dominating(g, set, a, b)) {
    throw Error(ErrorCode::verification_failed,
                "set is not (" + std::to_string(a) + "," + std::to_string(b) + ")-dominating");
  }
  if (claimed_bound && static_cast<long long>(set.size()) > ceil_times(*claimed_bound, g.order())) {
    throw Error(ErrorCode::verification_failed, "set of size " + std::to_string(set.size()) + " exceeds bound " +
                                                    to_fraction(*claimed_bound) + " * n");
  }
  return DominationCertificate{std::move(set), a, b, true, std::move(claimed_bound), method};
}

enum class GammaStatus { optimal, infeasible, budget_exceeded };

constexpr std::string_view to_string(GammaStatus s) {
  switch (s) {
    case GammaStatus::optimal: return "optimal";
    case GammaStatus::infeasible: return "infeasible";
    case GammaStatus::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

struct GammaResult {
  GammaStatus status = GammaStatus::infeasible;
  /// Minimum size when optimal; best size found so far when the budget ran out.
  std::optional<int> size;
  VertexSet witness;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;
inline constexpr int kMaxExactOrder = 64;

namespace detail {

class GammaSearch {
 public:
  GammaSearch(const Graph& g, int a, int b, std::uint64_t node_limit)
      : g_(g), a_(a), b_(b), limit_(node_limit), n_(g.order()),
        state_(static_cast<std::size_t>(n_), kUndecided),
        in_count_(static_cast<std::size_t>(n_), 0),
        open_count_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) open_count_[v] = g.degree(v);
  }

  GammaResult run() {
    GammaResult result;
    const int need_any = std::min(a_, b_);
    bool all_in_ok = true;
    for (Vertex v = 0; v < n_; ++v) {
      if (g_.degree(v) < need_any) return finish(result);
      all_in_ok = all_in_ok && g_.degree(v) >= a_;
    }
    // S = V is dominating exactly when every vertex has a neighbors.
    if (all_in_ok) {
      best_size_ = n_;
      best_mask_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
      have_best_ = true;
    }
    search(0, 0, 0);
    return finish(result);
  }

 private:
  static constexpr char kUndecided = 0;
  static constexpr char kIn = 1;
  static constexpr char kOut = 2;

  int need(Vertex v) const {
    return state_[v] == kIn ? a_ : state_[v] == kOut ? b_ : std::min(a_, b_);
  }

  bool satisfiable(Vertex v) const { return in_count_[v] + open_count_[v] >= need(v); }

  int deficit_bound() const {
    int worst = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (state_[v] != kUndecided) worst = std::max(worst, need(v) - in_count_[v]);
    }
    return worst;
  }

  void search(Vertex next, int size, std::uint64_t mask) {
    if (aborted_) return;
    if (++nodes_ > limit_) {
      aborted_ = true;
      return;
    }
    if (have_best_ && size + deficit_bound() >= best_size_) return;
    if (next == n_) {
      best_size_ = size;
      best_mask_ = mask;
      have_best_ = true;
      return;
    }

    // include first
    state_[next] = kIn;
    for (Vertex w : g_.neighbors(next)) {
      ++in_count_[w];
      --open_count_[w];
    }
    if (satisfiable(next)) search(next + 1, size + 1, mask | (std::uint64_t{1} << next));
    for (Vertex w : g_.neighbors(next)) {
      --in_count_[w];
      ++open_count_[w];
    }

    state_[next] = kOut;
    for (Vertex w : g_.neighbors(next)) --open_count_[w];
    bool ok = satisfiable(next);
    for (Vertex w : g_.neighbors(next)) ok = ok && satisfiable(w);
    if (ok) search(next + 1, size, mask);
    for (Vertex w : g_.neighbors(next)) ++open_count_[w];
    state_[next] = kUndecided;
  }

  GammaResult& finish(GammaResult& result) {
    result.nodes = nodes_;
    if (have_best_) {
      result.size = best_size_;
      for (Vertex v = 0; v < n_; ++v)
        if ((best_mask_ >> v) & 1) result.witness.push_back(v);
    }
    if (aborted_) {
      result.status = GammaStatus::budget_exceeded;
    } else {
      result.status = have_best_ ? GammaStatus::optimal : GammaStatus::infeasible;
    }
    return result;
  }

  const Graph& g_;
  int a_, b_;
  std::uint64_t limit_;
  int n_;
  std::vector<char> state_;
  std::vector<int> in_count_;
  std::vector<int> open_count_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool have_best_ = false;
  int best_size_ = 0;
  std::uint64_t best_mask_ = 0;
};

}  // namespace detail

/// Minimum (a,b)-dominating set by branch and bound over vertices in index
/// order, include before exclude. A branch is cut when some vertex can no
/// longer reach its quota from in-set plus undecided neighbors, or when the
/// largest outstanding quota deficit cannot beat the incumbent. The witness is
/// the first optimum in include-first order, so it is reproducible.
inline GammaResult gamma_exact(const Graph& g, int a, int b, std::uint64_t node_limit = kDefaultNodeLimit) {
  if (a < 1 || b < 1) throw Error(ErrorCode::parameter_out_of_range, "a and b must be positive");
  if (g.order() > kMaxExactOrder) {
    throw Error(ErrorCode::parameter_out_of_range,
                "exact search supports at most " + std::to_string(kMaxExactOrder) + " vertices");
  }
  return detail::GammaSearch(g, a, b, node_limit).run();
}

struct IndependentSetResult {
  int size = 0;
  VertexSet witness;
};

namespace detail {

inline void mis_search(std::span<const std::uint64_t> adj, std::uint64_t remaining, std::uint64_t chosen,
                       int& best, std::uint64_t& best_set) {
  const int taken = std::popcount(chosen);
  if (taken + std::popcount(remaining) <= best) return;
  // Isolated vertices join for free.
  std::uint64_t iso = 0;
  int pick = -1;
  int pick_degree = -1;
  for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(adj[v] & remaining);
    if (d == 0) {
      iso |= std::uint64_t{1} << v;
    } else if (d > pick_degree) {
      pick = v;
      pick_degree = d;
    }
  }
  if (pick < 0) {
    if (taken + std::popcount(iso) > best) {
      best = taken + std::popcount(iso);
      best_set = chosen | iso;
    }
    return;
  }
  remaining &= ~iso;
  chosen |= iso;
  const std::uint64_t bit = std::uint64_t{1} << pick;
  mis_search(adj, remaining & ~bit & ~adj[pick], chosen | bit, best, best_set);
  mis_search(adj, remaining & ~bit, chosen, best, best_set);
}

}  // namespace detail

/// Maximum independent set, branching on a highest-degree remaining vertex.
inline IndependentSetResult independence_number_exact(const Graph& g) {
  if (g.order() > kMaxExactOrder) {
    throw Error(ErrorCode::parameter_out_of_range,
                "exact search supports at most " + std::to_string(kMaxExactOrder) + " vertices");
  }
  const int n = g.order();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  int best = -1;
  std::uint64_t best_set = 0;
  detail::mis_search(adj, all, 0, best, best_set);
  IndependentSetResult result;
  result.size = std::max(best, 0);
  for (Vertex v = 0; v < n; ++v)
    if ((best_set >> v) & 1) result.witness.push_back(v);
  return result;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> set) {
  const auto in = membership(g, set);
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) return false;
  return true;
}

}  // namespace dominator
