#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dominator/error.hpp"
#include "dominator/exact.hpp"
#include "dominator/generators.hpp"
#include "dominator/graph.hpp"
#include "dominator/lll.hpp"
#include "dominator/rational.hpp"
#include "dominator/turan.hpp"

namespace dominator {

enum class BoundMethod { henning_yeo, chang, kaz, projective_plane, moore_graph, turan, lll, exact };

constexpr std::string_view to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::henning_yeo: return "henning_yeo";
    case BoundMethod::chang: return "chang";
    case BoundMethod::kaz: return "kaz";
    case BoundMethod::projective_plane: return "projective_plane";
    case BoundMethod::moore_graph: return "moore_graph";
    case BoundMethod::turan: return "turan";
    case BoundMethod::lll: return "lll";
    case BoundMethod::exact: return "exact";
  }
  return "unknown";
}

struct BoundReport {
  BoundMethod method = BoundMethod::exact;
  bool applicable = false;
  /// Why the method does not apply, or the caveat it was reported under.
  std::string reason;
  /// Upper bound on gamma in vertices (exact value for BoundMethod::exact).
  std::optional<double> value;
  /// The bound as a fraction of n, for the fraction-type formulas.
  std::optional<Rational> fraction;
  /// value is a witnessed set size or an equality case, not a formula.
  bool integral = false;
  bool vacuous = false;
  std::map<std::string, std::string> parameters;
};

inline BoundReport not_applicable(BoundMethod method, std::string reason) {
  BoundReport r;
  r.method = method;
  r.reason = std::move(reason);
  return r;
}

namespace detail {

inline BoundReport from_fraction(BoundMethod method, const Rational& fraction, int n) {
  BoundReport r;
  r.method = method;
  r.applicable = true;
  r.fraction = fraction;
  r.value = to_double(fraction * n);
  r.vacuous = fraction > 1;
  return r;
}

inline BoundReport from_count(BoundMethod method, long long count, int n) {
  BoundReport r;
  r.method = method;
  r.applicable = true;
  r.value = static_cast<double>(count);
  r.integral = true;
  r.vacuous = count > n;
  return r;
}

/// (1/n) * sum_i C(d_i + shift, m), exact.
inline Rational mean_binomial(const Graph& g, int shift, int m) {
  BigInt total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += binomial(g.degree(v) + shift, m);
  return Rational(total, BigInt(g.order()));
}

inline BoundReport log_bound(BoundMethod method, int n, int spread, const Rational& mean) {
  if (mean < 1) throw Error(ErrorCode::parameter_out_of_range, "mean binomial below 1");
  BoundReport r;
  r.method = method;
  r.applicable = true;
  r.value = n * (std::log(static_cast<double>(spread)) + std::log(to_double(mean)) + 1.0) / spread;
  r.vacuous = *r.value > n;
  return r;
}

}  // namespace detail

/// gamma_{k-1,k} <= n (ln(delta-k+2) + ln dt_{k-1} + 1) / (delta-k+2),
/// dt_m = (1/n) sum_i C(d_i + 1, m).
inline BoundReport bound_chang(const Graph& g, int k) {
  const int delta = min_degree(g);
  if (k < 1 || k > delta + 1) {
    throw Error(ErrorCode::k_out_of_range, "chang needs 1 <= k <= delta+1 = " + std::to_string(delta + 1));
  }
  const Rational mean = detail::mean_binomial(g, 1, k - 1);
  auto r = detail::log_bound(BoundMethod::chang, g.order(), delta - k + 2, mean);
  r.parameters = {{"k", std::to_string(k)}, {"a", std::to_string(k - 1)}, {"b", std::to_string(k)},
                  {"d_tilde", to_fraction(mean)}};
  return r;
}

/// gamma_{k,k} <= n (ln(delta-k) + ln dh_k + 1) / (delta-k), dh_m = (1/n) sum_i C(d_i, m).
inline BoundReport bound_kaz(const Graph& g, int k) {
  const int delta = min_degree(g);
  if (k < 1 || delta <= k) {
    throw Error(ErrorCode::k_out_of_range, "kaz needs delta > k >= 1, delta = " + std::to_string(delta));
  }
  const Rational mean = detail::mean_binomial(g, 0, k);
  auto r = detail::log_bound(BoundMethod::kaz, g.order(), delta - k, mean);
  r.parameters = {{"k", std::to_string(k)}, {"d_hat", to_fraction(mean)}};
  return r;
}

enum class FixedBound { henning_yeo, projective_plane, moore_graph };

/// Prior-work constants. `extremal` selects the equality case (Heawood-like
/// incidence graph, Moore graph); that is an assertion about the graph which
/// this function does not check.
inline BoundReport bound_fixed(const DegreeProfile& profile, int n, FixedBound which, bool extremal = false) {
  switch (which) {
    case FixedBound::henning_yeo: {
      if (profile.min_degree < 3) {
        throw Error(ErrorCode::not_applicable, "henning_yeo needs delta >= 3");
      }
      auto r = detail::from_fraction(BoundMethod::henning_yeo, make_rational(11, 13), n);
      r.reason = "gamma_{2,2}; assumes a connected graph other than the Heawood graph";
      r.parameters = {{"a", "2"}, {"b", "2"}};
      return r;
    }
    case FixedBound::projective_plane: {
      if (!profile.is_regular || *profile.regular_degree < 3) {
        throw Error(ErrorCode::not_applicable, "projective_plane needs an r-regular graph with r >= 3");
      }
      const long long r = *profile.regular_degree;
      auto rep = extremal ? detail::from_count(BoundMethod::projective_plane, 2 * r * (r - 1), n)
                          : detail::from_fraction(BoundMethod::projective_plane, make_rational(r * (r - 1) - 1, r * (r - 1)), n);
      rep.reason = extremal ? "equality: incidence graph of a projective plane of order r-1"
                            : "assumes the graph is not the incidence graph of a projective plane of order r-1";
      rep.parameters = {{"r", std::to_string(r)}, {"a", std::to_string(r - 1)}, {"b", std::to_string(r - 1)}};
      return rep;
    }
    case FixedBound::moore_graph: {
      if (!profile.is_regular || *profile.regular_degree < 2) {
        throw Error(ErrorCode::not_applicable, "moore_graph needs an r-regular graph with r >= 2");
      }
      const long long r = *profile.regular_degree;
      auto rep = extremal ? detail::from_count(BoundMethod::moore_graph, r * r, n)
                          : detail::from_fraction(BoundMethod::moore_graph, make_rational(r * r - 1, r * r), n);
      rep.reason = extremal ? "equality: Moore graph of degree r and diameter 2"
                            : "assumes the graph is not a Moore graph of diameter 2";
      rep.parameters = {{"r", std::to_string(r)}, {"a", std::to_string(r - 1)}, {"b", std::to_string(r)}};
      return rep;
    }
  }
  throw Error(ErrorCode::not_applicable, "unknown fixed bound");
}

struct CompareOptions {
  FamilyTags tags;
  std::uint64_t node_limit = kDefaultNodeLimit;
  int max_exact_order = 30;
  int max_colors = kDefaultMaxColors;
};

namespace detail {

inline std::vector<Strategy> strategies_for(const Graph& g, int a, int b) {
  std::vector<Strategy> out;
  const auto profile = degree_profile(g);
  const int delta = profile.min_degree;
  if (a == b) {
    const int k = a;
    if (k == 2) {
      if (delta >= 3) out.push_back(Strategy::tt22_min3());
      if (delta >= 4) out.push_back(Strategy::tt22_min4());
      const auto high = std::count_if(profile.degree_sequence.begin(), profile.degree_sequence.end(),
                                      [](int d) { return d >= 4; });
      if (delta >= 3 && 2 * high >= g.order()) out.push_back(Strategy::tt22_mixed());
    }
    if (delta >= k + 1) out.push_back(Strategy::kk_clique(k));
    if (delta >= 2 * k) out.push_back(Strategy::kk_matching(k));
    for (int d = 0; d <= k - 1 && k + 1 + d <= delta; ++d) out.push_back(Strategy::kk_partition(k, d));
  } else if (a < b && delta >= a + b) {
    out.push_back(Strategy::ab_general(a, b));
    if (b - a == 1) out.push_back(Strategy::ab_spanning(a, b));
  }
  return out;
}

inline std::string strategy_label(const Strategy& s) {
  std::string label(to_string(s.kind));
  switch (s.kind) {
    case StrategyKind::kk_clique:
    case StrategyKind::kk_matching: label += "(k=" + std::to_string(s.k) + ")"; break;
    case StrategyKind::kk_partition: label += "(k=" + std::to_string(s.k) + ",d=" + std::to_string(s.d) + ")"; break;
    case StrategyKind::ab_general:
    case StrategyKind::ab_spanning: label += "(a=" + std::to_string(s.a) + ",b=" + std::to_string(s.b) + ")"; break;
    default: break;
  }
  return label;
}

}  // namespace detail

/// Every method that speaks to gamma_{a,b}(g): applicable ones sorted by
/// value ascending, then the inapplicable ones with their reasons.
inline std::vector<BoundReport> compare_all(const Graph& g, int a, int b, const CompareOptions& opts = {}) {
  if (a < 1 || b < 1) throw Error(ErrorCode::parameter_out_of_range, "a and b must be positive");
  const int n = g.order();
  const auto profile = degree_profile(g);
  const int delta = profile.min_degree;
  std::vector<BoundReport> reports;

  if (n <= opts.max_exact_order) {
    const auto res = gamma_exact(g, a, b, opts.node_limit);
    if (res.status == GammaStatus::optimal) {
      auto r = detail::from_count(BoundMethod::exact, *res.size, n);
      r.parameters["nodes"] = std::to_string(res.nodes);
      reports.push_back(std::move(r));
    } else {
      reports.push_back(not_applicable(BoundMethod::exact, std::string(to_string(res.status))));
    }
  } else {
    reports.push_back(not_applicable(BoundMethod::exact, "n > " + std::to_string(opts.max_exact_order)));
  }

  if (a == 2 && b == 2 && delta >= 3 && is_connected(g)) {
    reports.push_back(bound_fixed(profile, n, FixedBound::henning_yeo));
  } else {
    reports.push_back(not_applicable(BoundMethod::henning_yeo, "needs (a,b)=(2,2), delta >= 3, connected"));
  }

  if (b == a + 1 && b <= delta + 1) {
    reports.push_back(bound_chang(g, b));
  } else {
    reports.push_back(not_applicable(BoundMethod::chang, "needs (a,b)=(k-1,k) with k <= delta+1"));
  }

  if (a == b && delta > a) {
    reports.push_back(bound_kaz(g, a));
  } else {
    reports.push_back(not_applicable(BoundMethod::kaz, "needs (a,b)=(k,k) with delta > k"));
  }

  const std::optional<int> r = profile.regular_degree;
  if (r && *r >= 3 && a == *r - 1 && b == *r - 1) {
    reports.push_back(bound_fixed(profile, n, FixedBound::projective_plane, opts.tags.projective_incidence));
  } else {
    reports.push_back(not_applicable(BoundMethod::projective_plane, "needs r-regular, r >= 3, (a,b)=(r-1,r-1)"));
  }
  if (r && *r >= 2 && a == *r - 1 && b == *r) {
    reports.push_back(bound_fixed(profile, n, FixedBound::moore_graph, opts.tags.moore));
  } else {
    reports.push_back(not_applicable(BoundMethod::moore_graph, "needs r-regular, (a,b)=(r-1,r)"));
  }

  const auto strategies = detail::strategies_for(g, a, b);
  for (const auto& s : strategies) {
    const std::string label = detail::strategy_label(s);
    try {
      const auto res = turan_dominating_set(g, s);
      auto rep = detail::from_count(BoundMethod::turan, static_cast<long long>(res.certificate.set.size()), n);
      rep.fraction = res.certificate.claimed_bound;
      rep.reason = "verified witness";
      rep.parameters = {{"strategy", label}, {"alpha", to_fraction(res.aux.edge_budget)}};
      reports.push_back(std::move(rep));
    } catch (const Error& e) {
      auto rep = not_applicable(BoundMethod::turan, e.what());
      rep.parameters = {{"strategy", label}};
      reports.push_back(std::move(rep));
    }
  }
  if (strategies.empty()) {
    reports.push_back(not_applicable(BoundMethod::turan, "no construction matches (a,b) at this minimum degree"));
  }

  const auto lll = minimal_colors({delta, profile.max_degree, a, b}, opts.max_colors);
  if (lll.minimal_colors) {
    auto rep = detail::from_fraction(BoundMethod::lll, *lll.bound, n);
    rep.parameters = {{"N", std::to_string(*lll.minimal_colors)}, {"P", to_fraction(lll.probability)}};
    reports.push_back(std::move(rep));
  } else {
    reports.push_back(not_applicable(BoundMethod::lll, a > delta || b > delta
                                                           ? "needs a, b <= delta"
                                                           : "no N <= " + std::to_string(opts.max_colors) + " satisfies the condition"));
  }

  std::stable_sort(reports.begin(), reports.end(), [](const BoundReport& x, const BoundReport& y) {
    if (x.applicable != y.applicable) return x.applicable;
    if (!x.applicable) return false;
    return *x.value < *y.value;
  });
  return reports;
}

}  // namespace dominator
