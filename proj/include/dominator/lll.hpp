#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dominator/error.hpp"
#include "dominator/exact.hpp"
#include "dominator/graph.hpp"
#include "dominator/rational.hpp"
#include "dominator/rng.hpp"

// Random N-coloring bound. Color every vertex uniformly from N colors and
// drop the largest color class; the rest is (a,b)-dominating provided every
// vertex is "good" (see is_good_at). The local lemma turns a small per-vertex
// failure probability into existence, Moser-Tardos resampling into a witness.

namespace dominator {

struct LllParams {
  int delta = 1;  // minimum degree
  int Delta = 1;  // maximum degree
  int a = 1;
  int b = 1;
};

/// 2.718281828459045236, which exceeds e, so every condition that holds
/// with it also holds with e itself.
inline Rational e_upper() { return Rational(BigInt("2718281828459045236"), BigInt("1000000000000000000")); }

namespace detail {

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// sum_{j < terms} C(delta, j) (N-1)^j
inline BigInt tail_sum(int delta, int colors, int terms) {
  BigInt sum = 0;
  BigInt power = 1;
  for (int j = 0; j < terms; ++j) {
    sum += binomial(delta, j) * power;
    power *= colors - 1;
  }
  return sum;
}

inline void check_prob_params(int delta, int colors, int a, int b) {
  if (delta < 1 || colors < 2 || a < 1 || b < 1 || a > delta || b > delta) {
    throw Error(ErrorCode::parameter_out_of_range, "need delta >= 1, N >= 2 and 1 <= a, b <= delta");
  }
}

}  // namespace detail

/// Union bound on the chance a degree-delta vertex is bad under a uniform
/// N-coloring:
///   [sum_{j<b} C(delta,j)(N-1)^j + (N-1) * sum_{j<a} C(delta,j)(N-1)^j] / N^delta.
/// The first sum: fewer than b neighbors avoid v's own color. The second:
/// for one of the N-1 other colors x, fewer than a neighbors avoid x.
inline Rational failure_prob(int delta, int colors, int a, int b) {
  detail::check_prob_params(delta, colors, a, b);
  const BigInt own = detail::tail_sum(delta, colors, b);
  const BigInt other = detail::tail_sum(delta, colors, a);
  BigInt denom = boost::multiprecision::pow(BigInt(colors), static_cast<unsigned>(delta));
  return Rational(own + (colors - 1) * other, denom);
}

/// Same event with the removed color fixed in advance rather than unioned
/// over: the previous value divided by N. Diagnostic only.
inline Rational failure_prob_fixed_color(int delta, int colors, int a, int b) {
  return failure_prob(delta, colors, a, b) / colors;
}

struct LllCondition {
  bool holds = false;
  /// e_upper * P * Delta^2
  Rational value;
};

/// Symmetric local lemma test with Delta^2 as the dependency count: an event
/// at v shares color variables only with events within distance two.
inline LllCondition lll_condition(const Rational& p, int Delta) {
  // P is a union bound and may exceed 1 for small N.
  if (Delta < 1 || p < 0) throw Error(ErrorCode::parameter_out_of_range, "need P >= 0 and Delta >= 1");
  LllCondition c;
  c.value = e_upper() * p * Rational(static_cast<long long>(Delta) * Delta);
  c.holds = c.value <= 1;
  return c;
}

inline constexpr int kDefaultMaxColors = 64;

struct LllReport {
  LllParams params;
  std::optional<int> minimal_colors;
  /// Failure probability and condition value at minimal_colors, or at
  /// max_colors when the search came up empty.
  Rational probability;
  Rational condition_value;
  /// (N-1)/N when minimal_colors is present.
  std::optional<Rational> bound;
};

/// Smallest N in [2, max_colors] for which the local lemma condition holds.
/// Scans linearly; the condition is not assumed monotone in N.
inline LllReport minimal_colors(const LllParams& params, int max_colors = kDefaultMaxColors) {
  if (max_colors < 2) throw Error(ErrorCode::parameter_out_of_range, "max_colors must be at least 2");
  if (params.Delta < params.delta) throw Error(ErrorCode::parameter_out_of_range, "Delta must be >= delta");
  LllReport report;
  report.params = params;
  if (params.a > params.delta || params.b > params.delta || params.a < 1 || params.b < 1) return report;
  for (int colors = 2; colors <= max_colors; ++colors) {
    report.probability = failure_prob(params.delta, colors, params.a, params.b);
    const auto cond = lll_condition(report.probability, params.Delta);
    report.condition_value = cond.value;
    if (cond.holds) {
      report.minimal_colors = colors;
      report.bound = make_rational(colors - 1, colors);
      break;
    }
  }
  return report;
}

struct Coloring {
  int colors = 0;
  std::vector<int> color;
};

/// Vertex v is good when (i) at least b neighbors differ from v's color and
/// (ii) for every other color x, at least a neighbors are not colored x.
/// Good everywhere means dropping ANY one color class leaves an
/// (a,b)-dominating set.
inline bool is_good_at(const Graph& g, const Coloring& c, Vertex v, int a, int b) {
  std::vector<int> per_color(static_cast<std::size_t>(c.colors), 0);
  for (Vertex w : g.neighbors(v)) ++per_color[c.color[w]];
  const int degree = g.degree(v);
  const int own = c.color[v];
  if (degree - per_color[own] < b) return false;
  for (int x = 0; x < c.colors; ++x) {
    if (x != own && degree - per_color[x] < a) return false;
  }
  return true;
}

inline bool is_good(const Graph& g, const Coloring& c, int a, int b) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!is_good_at(g, c, v, a, b)) return false;
  return true;
}

struct MoserTardosRun {
  Coloring coloring;
  std::uint64_t resamples = 0;
};

/// Uniform random coloring, then while some vertex is bad, redraw the colors
/// of the lowest-index bad vertex and its neighbors. Throws
/// resample-budget-exceeded after `max_resamples` redraws.
inline MoserTardosRun moser_tardos(const Graph& g, int colors, int a, int b, std::uint64_t seed,
                                   std::uint64_t max_resamples) {
  if (colors < 1 || a < 1 || b < 1) throw Error(ErrorCode::parameter_out_of_range, "need N, a, b >= 1");
  Rng rng(seed);
  MoserTardosRun run;
  Coloring& c = run.coloring;
  c.colors = colors;
  c.color.resize(static_cast<std::size_t>(g.order()));
  for (auto& x : c.color) x = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(colors)));

  std::set<Vertex> bad;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!is_good_at(g, c, v, a, b)) bad.insert(v);

  std::vector<Vertex> touched;
  while (!bad.empty()) {
    if (run.resamples == max_resamples) {
      throw Error(ErrorCode::resample_budget_exceeded, std::to_string(bad.size()) + " vertices still bad after " +
                                                           std::to_string(max_resamples) + " resamples");
    }
    ++run.resamples;
    const Vertex v = *bad.begin();
    c.color[v] = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(colors)));
    for (Vertex w : g.neighbors(v)) c.color[w] = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(colors)));

    // Goodness at u reads the colors of N[u]; recheck everything within distance 2.
    touched.assign(1, v);
    for (Vertex w : g.neighbors(v)) {
      touched.push_back(w);
      for (Vertex x : g.neighbors(w)) touched.push_back(x);
    }
    for (Vertex u : touched) {
      if (is_good_at(g, c, u, a, b)) {
        bad.erase(u);
      } else {
        bad.insert(u);
      }
    }
  }
  if (!is_good(g, c, a, b)) throw Error(ErrorCode::verification_failed, "resampling ended on a bad coloring");
  return run;
}

/// Drops a largest color class (ties to the smallest color) and certifies
/// the rest. At least ceil(n/N) vertices share the dropped color.
inline DominationCertificate extract_dominating(const Graph& g, const Coloring& c, int a, int b) {
  if (static_cast<int>(c.color.size()) != g.order() || c.colors < 1 ||
      std::any_of(c.color.begin(), c.color.end(), [&](int x) { return x < 0 || x >= c.colors; })) {
    throw Error(ErrorCode::coloring_not_good, "coloring is not a total map into {0..N-1}");
  }
  if (!is_good(g, c, a, b)) throw Error(ErrorCode::coloring_not_good, "some vertex is bad under this coloring");
  std::vector<int> class_size(static_cast<std::size_t>(c.colors), 0);
  for (int x : c.color) ++class_size[x];
  const int dropped = static_cast<int>(std::max_element(class_size.begin(), class_size.end()) - class_size.begin());
  VertexSet kept;
  for (Vertex v = 0; v < g.order(); ++v)
    if (c.color[v] != dropped) kept.push_back(v);
  return certify(g, std::move(kept), a, b, Method::lll, make_rational(c.colors - 1, c.colors));
}

/// The fifteen (delta, Delta, a, b) rows tabulated for the coloring bound.
inline std::vector<LllParams> table_rows() {
  return {
      {7, 7, 2, 2},   {7, 8, 2, 2},   {9, 9, 2, 2},   {9, 10, 2, 2},  {9, 11, 2, 2},
      {14, 14, 2, 2}, {8, 8, 1, 2},   {8, 9, 1, 2},   {8, 10, 1, 2},  {8, 11, 1, 2},
      {13, 13, 1, 2}, {13, 14, 1, 2}, {8, 8, 2, 1},   {13, 13, 2, 1}, {13, 14, 2, 1},
  };
}

/// Smallest r for which an r-regular graph gets the (N-1)/N bound at N colors.
inline std::optional<int> smallest_regular_degree(int colors, int a, int b, int max_degree = 512) {
  for (int r = std::max(a, b); r <= max_degree; ++r) {
    if (lll_condition(failure_prob(r, colors, a, b), r).holds) return r;
  }
  return std::nullopt;
}

}  // namespace dominator
