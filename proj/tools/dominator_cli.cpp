// dominator: command-line front end for (a,b)-domination.
//
//   dominator gen <kind> [params...] [--seed S] [--format edgelist|graph6]
//   dominator verify <file> --set 0,1,2 -a A -b B
//   dominator gamma <file> -a A -b B [--node-limit L]
//   dominator turan <file> --strategy STRAT [-k K] [-d D] [-a A -b B] [--seed S]
//   dominator lll-table [--rows FILE | --delta D --Delta DD -a A -b B]
//   dominator lll-run <file> -N N -a A -b B --seed S [--max-resamples M]
//   dominator bounds <file> -a A -b B
//
// Exit codes: 0 success, 1 usage/format error, 2 infeasible, 3 budget
// exceeded, 4 verify rejected the set.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dominator/dominator.hpp"
#include "dominator/report.hpp"

namespace {

using namespace dominator;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;
constexpr int kExitRejected = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void diagnose(std::string_view code, std::string_view message) {
  std::string flat(message);
  for (char& c : flat)
    if (c == '\n') c = ' ';
  std::cerr << "dominator: error=" << code << " " << flat << '\n';
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string slurp(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_all(in);
}

Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  if (format == "edgelist") return parse_edge_list(text);
  if (format == "graph6") return parse_graph6(text);
  return parse_graph_auto(text);
}

/// Explicit --seed, else DOMINATOR_SEED, else a usage error.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::string_view what) {
  if (seed) return *seed;
  if (const char* env = std::getenv("DOMINATOR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("DOMINATOR_SEED is not an unsigned integer");
    }
  }
  throw UsageError(std::string(what) + " is randomized and needs --seed or DOMINATOR_SEED");
}

VertexSet parse_set(const std::string& text) {
  VertexSet set;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto trimmed = std::string(detail::trim(token));
    if (trimmed.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(trimmed, &used);
      if (used != trimmed.size()) throw std::invalid_argument(trimmed);
      set.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad vertex id '" + trimmed + "' in --set");
    }
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

std::string join(const VertexSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? " " : "") + std::to_string(set[i]);
  return out;
}

std::vector<LllParams> read_rows(const std::string& path) {
  std::vector<LllParams> rows;
  std::istringstream in(slurp(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream fields{std::string(t)};
    LllParams p;
    if (!(fields >> p.delta >> p.Delta >> p.a >> p.b)) {
      throw Error(ErrorCode::malformed_line, "line " + std::to_string(line_no) + ": expected 'delta Delta a b'");
    }
    rows.push_back(p);
  }
  return rows;
}

// --- subcommands --------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;
  std::string format = "edgelist";
};

int run_gen(const GenArgs& args) {
  const auto kind = parse_graph_kind(args.kind);
  if (!kind) throw UsageError("unknown graph kind '" + args.kind + "'");
  std::optional<std::uint64_t> seed;
  if (*kind == GraphKind::random_regular) seed = resolve_seed(args.seed, "gen random_regular");
  const auto generated = generate(*kind, args.params, seed);
  if (args.format == "graph6") {
    std::cout << write_graph6(generated.graph) << '\n';
  } else {
    std::cout << "# " << args.kind;
    for (int p : args.params) std::cout << ' ' << p;
    if (generated.tags.projective_incidence) std::cout << " [projective-incidence]";
    if (generated.tags.moore) std::cout << " [moore]";
    std::cout << '\n' << write_edge_list(generated.graph);
  }
  return kExitOk;
}

struct GraphArgs {
  std::string path;
  std::string format = "auto";
  std::string output;
};

struct VerifyArgs : GraphArgs {
  std::string set;
  int a = 1;
  int b = 1;
};

int run_verify(const VerifyArgs& args) {
  const Graph g = load_graph(args.path, args.format);
  const VertexSet set = parse_set(args.set);
  const bool ok = is_ab_dominating(g, set, args.a, args.b);
  if (args.output == "json") {
    auto j = report::envelope("verify");
    j["a"] = args.a;
    j["b"] = args.b;
    j["set"] = set;
    j["size"] = set.size();
    j["dominating"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (ok ? "true" : "false") << '\n';
  }
  return ok ? kExitOk : kExitRejected;
}

struct GammaArgs : GraphArgs {
  int a = 1;
  int b = 1;
  std::uint64_t node_limit = kDefaultNodeLimit;
};

int run_gamma(const GammaArgs& args) {
  const Graph g = load_graph(args.path, args.format);
  const auto res = gamma_exact(g, args.a, args.b, args.node_limit);
  if (args.output == "json") {
    auto j = report::envelope("gamma");
    j["a"] = args.a;
    j["b"] = args.b;
    j["n"] = g.order();
    j["status"] = to_string(res.status);
    j["nodes"] = res.nodes;
    if (res.status == GammaStatus::optimal) {
      j["gamma"] = *res.size;
      j["witness"] = res.witness;
    }
    std::cout << j.dump(2) << '\n';
  } else if (res.status == GammaStatus::optimal) {
    std::cout << *res.size << '\n' << "witness: " << join(res.witness) << '\n';
  } else {
    std::cout << to_string(res.status) << '\n';
  }
  if (res.status == GammaStatus::infeasible) {
    diagnose("infeasible", "no (" + std::to_string(args.a) + "," + std::to_string(args.b) + ")-dominating set exists");
    return kExitInfeasible;
  }
  if (res.status == GammaStatus::budget_exceeded) {
    diagnose("budget-exceeded", "node limit " + std::to_string(args.node_limit) + " reached");
    return kExitBudget;
  }
  return kExitOk;
}

struct TuranArgs : GraphArgs {
  std::string strategy;
  int k = 0;
  int d = 0;
  int a = 0;
  int b = 0;
  std::optional<std::uint64_t> seed;
  std::string subgraph;
  bool exact = false;
};

int run_turan(const TuranArgs& args) {
  const Graph g = load_graph(args.path, args.format);
  const auto kind = parse_strategy_kind(args.strategy);
  if (!kind) throw UsageError("unknown strategy '" + args.strategy + "'");
  Strategy s{.kind = *kind, .k = args.k, .d = args.d, .a = args.a, .b = args.b};
  if (args.seed) s.chooser = Chooser::seeded_random(*args.seed);
  if (!args.subgraph.empty()) s.subgraph = load_graph(args.subgraph, "auto");
  if (args.exact && g.order() > 30) throw UsageError("--exact extraction is limited to n <= 30");
  const auto res = turan_dominating_set(g, s, args.exact ? Extractor::exact : Extractor::greedy);

  if (args.output == "text") {
    std::cout << res.certificate.set.size() << '\n'
              << "set: " << join(res.certificate.set) << '\n'
              << "verified: " << (res.certificate.verified ? "true" : "false") << '\n'
              << "bound: " << res.size_bound << " (" << to_fraction(*res.certificate.claimed_bound) << " n)\n";
    return kExitOk;
  }
  auto j = report::envelope("turan");
  j["strategy"] = args.strategy;
  j["n"] = g.order();
  j["certificate"] = report::to_json(res.certificate);
  j["alpha"] = to_fraction(res.aux.edge_budget);
  j["aux_edges"] = res.aux.graph.size();
  j["contributed_edges"] = res.aux.contributed_edges();
  j["independent_set_size"] = res.independent.size();
  j["size_bound"] = res.size_bound;
  if (res.formula_budget) j["formula_alpha"] = to_fraction(*res.formula_budget);
  if (res.printed_bound) j["printed_bound"] = to_fraction(*res.printed_bound);
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

struct LllTableArgs {
  std::string rows;
  std::optional<int> delta, Delta, a, b;
  int max_colors = kDefaultMaxColors;
  std::string output = "tsv";
  bool fixed_color = false;
};

int run_lll_table(const LllTableArgs& args) {
  std::vector<LllParams> rows;
  const bool single = args.delta || args.Delta || args.a || args.b;
  if (!args.rows.empty() && single) throw UsageError("--rows excludes --delta/--Delta/-a/-b");
  if (!args.rows.empty()) {
    rows = read_rows(args.rows);
  } else if (single) {
    if (!(args.delta && args.a && args.b)) throw UsageError("--delta, -a and -b are required together");
    rows.push_back({*args.delta, args.Delta.value_or(*args.delta), *args.a, *args.b});
  } else {
    rows = table_rows();
  }
  std::vector<LllReport> reports;
  for (const auto& p : rows) reports.push_back(minimal_colors(p, args.max_colors));

  if (args.output == "json") {
    auto j = report::lll_table_json(reports);
    if (args.fixed_color) {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!reports[i].minimal_colors) continue;
        const auto& p = reports[i].params;
        j["rows"][i]["P_fixed_color"] = to_fraction(failure_prob_fixed_color(p.delta, *reports[i].minimal_colors, p.a, p.b));
      }
    }
    std::cout << j.dump(2) << '\n';
  } else if (args.output == "text") {
    for (const auto& r : reports) {
      std::cout << "delta=" << r.params.delta << " Delta=" << r.params.Delta << " a=" << r.params.a
                << " b=" << r.params.b << "  ";
      if (r.minimal_colors) {
        std::cout << "N=" << *r.minimal_colors << " bound=" << to_fraction(*r.bound)
                  << " n  e*P*Delta^2=" << to_decimal(r.condition_value, 6) << '\n';
      } else {
        std::cout << "no N <= " << args.max_colors << '\n';
      }
    }
  } else {
    std::cout << report::kLllHeader << (args.fixed_color ? "\tP_fixed_color" : "") << '\n';
    for (const auto& r : reports) {
      std::cout << report::to_tsv_row(r);
      if (args.fixed_color) {
        std::cout << '\t'
                  << (r.minimal_colors ? to_fraction(failure_prob_fixed_color(r.params.delta, *r.minimal_colors,
                                                                              r.params.a, r.params.b))
                                       : std::string("NA"));
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

struct LllRunArgs : GraphArgs {
  int colors = 2;
  int a = 1;
  int b = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_resamples;
};

int run_lll_run(const LllRunArgs& args) {
  const Graph g = load_graph(args.path, args.format);
  const std::uint64_t seed = resolve_seed(args.seed, "lll-run");
  const std::uint64_t budget = args.max_resamples.value_or(50ULL * static_cast<std::uint64_t>(g.order()));
  const auto run = moser_tardos(g, args.colors, args.a, args.b, seed, budget);
  const auto cert = extract_dominating(g, run.coloring, args.a, args.b);
  if (args.output == "text") {
    std::cout << cert.set.size() << '\n'
              << "set: " << join(cert.set) << '\n'
              << "resamples: " << run.resamples << '\n';
    return kExitOk;
  }
  auto j = report::envelope("lll-run");
  j["n"] = g.order();
  j["N"] = args.colors;
  j["seed"] = seed;
  j["resamples"] = run.resamples;
  j["coloring"] = run.coloring.color;
  j["certificate"] = report::to_json(cert);
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

struct BoundsArgs : GraphArgs {
  int a = 1;
  int b = 1;
  bool projective = false;
  bool moore = false;
  std::uint64_t node_limit = kDefaultNodeLimit;
};

int run_bounds(const BoundsArgs& args) {
  const Graph g = load_graph(args.path, args.format);
  CompareOptions opts;
  opts.tags = {.projective_incidence = args.projective, .moore = args.moore};
  opts.node_limit = args.node_limit;
  const auto reports = compare_all(g, args.a, args.b, opts);
  const auto profile = degree_profile(g);
  if (args.output == "json") {
    auto j = report::envelope("bounds");
    j["n"] = g.order();
    j["delta"] = profile.min_degree;
    j["Delta"] = profile.max_degree;
    j["a"] = args.a;
    j["b"] = args.b;
    j["rows"] = json::array();
    for (const auto& r : reports) j["rows"].push_back(report::to_json(r));
    std::cout << j.dump(2) << '\n';
  } else if (args.output == "tsv") {
    std::cout << report::bounds_tsv(reports, profile, args.a, args.b);
  } else {
    std::cout << "n=" << g.order() << " delta=" << profile.min_degree << " Delta=" << profile.max_degree
              << " (a,b)=(" << args.a << "," << args.b << ")\n";
    for (const auto& r : reports) {
      std::cout << "  " << std::left << std::setw(15) << to_string(r.method);
      if (r.applicable) {
        std::cout << std::setw(14) << report::format_double(*r.value);
        if (r.fraction) std::cout << to_fraction(*r.fraction) << " n ";
        if (r.vacuous) std::cout << "[vacuous] ";
      } else {
        std::cout << std::setw(14) << "-" << "n/a: ";
      }
      for (const auto& [key, value] : r.parameters) std::cout << key << "=" << value << ' ';
      if (!r.reason.empty()) std::cout << "(" << r.reason << ")";
      std::cout << '\n';
    }
  }
  const bool infeasible = std::any_of(reports.begin(), reports.end(), [](const BoundReport& r) {
    return r.method == BoundMethod::exact && !r.applicable && r.reason == "infeasible";
  });
  if (infeasible) {
    diagnose("infeasible", "no (" + std::to_string(args.a) + "," + std::to_string(args.b) + ")-dominating set exists");
    return kExitInfeasible;
  }
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::resample_budget_exceeded:
    case ErrorCode::generation_retry_limit: return kExitBudget;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(a,b)-domination: exact solving, constructive and probabilistic upper bounds"};
  app.require_subcommand(1);

  auto add_graph = [](CLI::App* sub, GraphArgs& g, const std::string& default_output) {
    g.output = default_output;
    sub->add_option("file", g.path, "Graph file, or - for stdin")->required();
    sub->add_option("--format", g.format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    sub->add_option("--output", g.output, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  };

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("kind", gen.kind, "heawood|petersen|cycle|complete|complete_bipartite|projective_incidence|random_regular")
      ->required();
  gen_cmd->add_option("params", gen.params, "Integer parameters of the family");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families");
  gen_cmd->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"edgelist", "graph6"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a set is (a,b)-dominating");
  add_graph(verify_cmd, verify, "text");
  verify_cmd->add_option("--set", verify.set, "Comma-separated vertex ids")->required();
  verify_cmd->add_option("-a", verify.a)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("-b", verify.b)->required()->check(CLI::PositiveNumber);

  GammaArgs gamma;
  auto* gamma_cmd = app.add_subcommand("gamma", "Exact (a,b)-domination number");
  add_graph(gamma_cmd, gamma, "text");
  gamma_cmd->add_option("-a", gamma.a)->required()->check(CLI::PositiveNumber);
  gamma_cmd->add_option("-b", gamma.b)->required()->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--node-limit", gamma.node_limit, "Search tree node budget");

  TuranArgs turan;
  auto* turan_cmd = app.add_subcommand("turan", "Dominating set from an auxiliary-graph independent set");
  add_graph(turan_cmd, turan, "json");
  turan_cmd->add_option("--strategy", turan.strategy, "tt22_min3|tt22_min4|tt22_mixed|kk_clique|kk_matching|kk_partition|ab_general|ab_spanning")
      ->required();
  turan_cmd->add_option("-k", turan.k);
  turan_cmd->add_option("-d", turan.d);
  turan_cmd->add_option("-a", turan.a);
  turan_cmd->add_option("-b", turan.b);
  turan_cmd->add_option("--seed", turan.seed, "Pick gadget neighbors at random with this seed");
  turan_cmd->add_option("--subgraph", turan.subgraph, "Spanning (b-a)-regular subgraph for ab_spanning");
  turan_cmd->add_flag("--exact", turan.exact, "Use a maximum independent set (n <= 30)");

  LllTableArgs table;
  auto* table_cmd = app.add_subcommand("lll-table", "Minimal color count per (delta, Delta, a, b)");
  table_cmd->add_option("--rows", table.rows, "File of 'delta Delta a b' lines");
  table_cmd->add_option("--delta", table.delta);
  table_cmd->add_option("--Delta", table.Delta);
  table_cmd->add_option("-a", table.a);
  table_cmd->add_option("-b", table.b);
  table_cmd->add_option("--n-max", table.max_colors, "Largest N to try")->check(CLI::Range(2, 1 << 20));
  table_cmd->add_option("--output", table.output)->check(CLI::IsMember({"text", "json", "tsv"}));
  table_cmd->add_flag("--fixed-color", table.fixed_color, "Also show P with the removed color fixed in advance");

  LllRunArgs lll_run;
  auto* run_cmd = app.add_subcommand("lll-run", "Moser-Tardos coloring and the dominating set it yields");
  add_graph(run_cmd, lll_run, "json");
  run_cmd->add_option("-N", lll_run.colors)->required()->check(CLI::Range(1, 1 << 20));
  run_cmd->add_option("-a", lll_run.a)->required()->check(CLI::PositiveNumber);
  run_cmd->add_option("-b", lll_run.b)->required()->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", lll_run.seed);
  run_cmd->add_option("--max-resamples", lll_run.max_resamples, "Default 50*n");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Compare every applicable bound on gamma_{a,b}");
  add_graph(bounds_cmd, bounds, "text");
  bounds_cmd->add_option("-a", bounds.a)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("-b", bounds.b)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_flag("--projective", bounds.projective, "Assert the graph is a projective-plane incidence graph");
  bounds_cmd->add_flag("--moore", bounds.moore, "Assert the graph is a Moore graph of diameter 2");
  bounds_cmd->add_option("--node-limit", bounds.node_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    diagnose("usage", e.what());
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify);
    if (*gamma_cmd) return run_gamma(gamma);
    if (*turan_cmd) return run_turan(turan);
    if (*table_cmd) return run_lll_table(table);
    if (*run_cmd) return run_lll_run(lll_run);
    if (*bounds_cmd) return run_bounds(bounds);
  } catch (const Error& e) {
    diagnose(to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    diagnose("usage", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
