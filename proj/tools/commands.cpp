#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "tonelab/bounds.hpp"
#include "tonelab/cnf.hpp"
#include "tonelab/coloring.hpp"
#include "tonelab/constructions.hpp"
#include "tonelab/errors.hpp"
#include "tonelab/graph_io.hpp"
#include "tonelab/mols.hpp"
#include "tonelab/solver.hpp"
#include "tonelab/tree_schemes.hpp"

namespace tonelab::cli {

using Json = nlohmann::ordered_json;

namespace {

int to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  return v;
}

std::vector<int> to_int_list(const std::vector<std::string>& tokens, const char* what) {
  std::vector<int> out;
  for (const auto& tok : tokens) {
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(to_int(part, what));
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string("missing ") + what);
  return out;
}

std::string fixed(double x, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

}  // namespace

int threads_from_env() {
  const char* raw = std::getenv("TONELAB_THREADS");
  if (raw == nullptr) return 1;
  try {
    const int v = to_int(raw, "thread count");
    return v >= 1 ? v : 1;
  } catch (const std::invalid_argument&) {
    return 1;
  }
}

Graph family_graph(const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("--family needs a name");
  const std::string& name = words[0];
  const std::vector<std::string> params(words.begin() + 1, words.end());
  auto want = [&](std::size_t count, const char* usage) {
    if (params.size() != count) {
      throw std::invalid_argument("family " + name + " expects " + usage);
    }
  };
  if (name == "path") {
    want(1, "N");
    return build_path(to_int(params[0], "N"));
  }
  if (name == "star") {
    want(1, "K");
    return build_star(to_int(params[0], "K"));
  }
  if (name == "complete") {
    want(1, "N");
    return build_complete(to_int(params[0], "N"));
  }
  if (name == "multipartite") {
    const auto parts = to_int_list(params, "part sizes");
    return build_complete_multipartite(parts);
  }
  if (name == "tree") {
    want(2, "DELTA DEPTH");
    return build_truncated_regular_tree(to_int(params[0], "DELTA"), to_int(params[1], "DEPTH"));
  }
  if (name == "clique-power") {
    want(2, "N B");
    return cartesian_power(build_complete(to_int(params[0], "N")), to_int(params[1], "B"));
  }
  if (name == "hypercube") {
    want(1, "B");
    return cartesian_power(build_complete(2), to_int(params[0], "B"));
  }
  if (name == "gnp") {
    want(3, "N P SEED");
    double p = 0;
    try {
      p = std::stod(params[1]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad probability '" + params[1] + "'");
    }
    return build_gnp(to_int(params[0], "N"), p, std::stoull(params[2]));
  }
  throw std::invalid_argument("unknown family '" + name +
                              "' (path, star, complete, multipartite, tree, clique-power, "
                              "hypercube, gnp)");
}

namespace {

struct GraphInput {
  std::string file;
  std::vector<std::string> family;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", file, "Graph file (`n m` header, then `u v` lines)");
    cmd->add_option("--family", family, "Named family: NAME PARAMS...")->expected(1, 4);
  }
  bool given() const { return !file.empty() || !family.empty(); }
  Graph load() const {
    if (!file.empty() && !family.empty()) throw std::invalid_argument("give a graph file or --family, not both");
    if (!family.empty()) return family_graph(family);
    if (file.empty()) throw std::invalid_argument("a graph file or --family is required");
    return read_graph_file(file);
  }
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

void write_witness(const std::string& path, const ToneColoring& c) {
  if (!path.empty()) write_coloring_file(path, c);
}

// ---------------------------------------------------------------- verify

int cmd_verify(Context& ctx, const std::string& graph_file, const std::string& coloring_file) {
  const Graph g = read_graph_file(graph_file);
  const ToneColoring c = read_coloring_file(coloring_file);
  if (c.num_vertices() != g.order()) {
    throw ParseError("coloring lists " + std::to_string(c.num_vertices()) + " vertices, graph has " +
                         std::to_string(g.order()),
                     0);
  }
  const auto rep = verify(g, c);
  if (ctx.json) {
    Json j;
    j["valid"] = rep.valid;
    j["t"] = c.t();
    j["colors_used"] = rep.colors_used;
    j["violations"] = Json::array();
    for (const auto& v : rep.violations) j["violations"].push_back({v.u, v.v, v.distance, v.shared});
    ctx.emit(j);
  } else {
    ctx.out << (rep.valid ? "valid" : "invalid") << " t=" << c.t() << " colors_used=" << rep.colors_used
            << '\n';
    for (const auto& v : rep.violations) {
      ctx.out << v.u << ' ' << v.v << ' ' << v.distance << ' ' << v.shared << '\n';
    }
  }
  return rep.valid ? kOk : kInvalid;
}

// ----------------------------------------------------------------- solve

struct SolveArgs {
  GraphInput input;
  int t = 0;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  std::uint64_t budget_ms = SearchBudget{}.max_millis;
  std::string witness_path;
  std::string cnf_path;
  int cnf_k = 0;
};

int cmd_solve(Context& ctx, const SolveArgs& a) {
  const Graph g = a.input.load();
  if (a.t < 1) throw std::invalid_argument("--t must be >= 1");
  const SearchBudget budget{a.budget_nodes, a.budget_ms};
  const auto res = tau_exact(g, a.t, budget, threads_from_env());
  if (res.witness && !verify(g, *res.witness).valid) throw std::logic_error("solver witness failed verification");
  write_witness(a.witness_path, *res.witness);

  std::int64_t cnf_k = 0;
  if (!a.cnf_path.empty()) {
    cnf_k = a.cnf_k > 0 ? a.cnf_k
                        : (res.status == SolveStatus::exact ? std::max<std::int64_t>(1, res.lower - 1)
                                                            : res.lower);
    const Cnf cnf = encode_tone_coloring(g, a.t, static_cast<int>(cnf_k));
    const std::vector<std::string> comments{
        "tonelab t-tone coloring decision instance",
        "n " + std::to_string(g.order()) + " t " + std::to_string(a.t) + " k " + std::to_string(cnf_k),
        "variable v*k+c+1 means vertex v has color c"};
    write_dimacs_file(a.cnf_path, cnf, comments);
  }

  if (ctx.json) {
    Json j;
    j["status"] = to_string(res.status);
    j["t"] = a.t;
    if (res.status == SolveStatus::exact) j["value"] = res.lower;
    j["lower"] = res.lower;
    j["upper"] = res.upper;
    j["nodes"] = res.stats.nodes;
    j["budget_exhausted"] = res.stats.budget_exhausted;
    if (!a.cnf_path.empty()) j["cnf_k"] = cnf_k;
    ctx.emit(j);
  } else {
    switch (res.status) {
      case SolveStatus::exact: ctx.out << "Exact " << res.lower << '\n'; break;
      case SolveStatus::lower_only:
        ctx.out << "LowerOnly " << res.lower << " (witnessed upper " << res.upper << ")\n";
        break;
      case SolveStatus::timeout:
        ctx.out << "Timeout [" << res.lower << ", " << res.upper << "]\n";
        break;
    }
    ctx.out << "nodes " << res.stats.nodes << "\nwall_ms " << res.stats.wall_millis << '\n';
    if (!a.cnf_path.empty()) ctx.out << "cnf k=" << cnf_k << " written to " << a.cnf_path << '\n';
  }
  return res.status == SolveStatus::exact ? kOk : kBudget;
}

// ----------------------------------------------------------------- bound

struct BoundRow {
  std::string source;
  std::string kind;
  Json value;  // null when not applicable
  std::string note;

  std::string shown() const {
    if (value.is_null()) return "-";
    return value.is_number_float() ? fixed(value.get<double>()) : value.dump();
  }
};

int cmd_bound(Context& ctx, const GraphInput& input, int t) {
  if (t < 1) throw std::invalid_argument("--t must be >= 1");
  const Graph g = input.load();
  std::vector<BoundRow> rows;
  for (const auto& r : bound_table(g, t)) {
    if (r.applicable) {
      rows.push_back({r.source, to_string(r.kind), r.value, r.reason});
    } else {
      rows.push_back({r.source, "n/a", nullptr, r.reason});
    }
  }
  rows.push_back({"clique", "lower", static_cast<std::int64_t>(t) * greedy_clique_size(g),
                  "t times a greedily found clique"});
  const std::string fam = input.family.empty() ? "" : input.family[0];
  if (fam == "multipartite") {
    const auto parts = to_int_list({input.family.begin() + 1, input.family.end()}, "part sizes");
    if (t >= 2) {
      const auto mb = multipartite_lower(parts, t);
      rows.push_back({"multipartite-real", "lower", std::round(mb.real_sum * 1e6) / 1e6, "sum of sqrt(t(t-1)a_i)"});
      rows.push_back({"multipartite-int", "lower", mb.integer_sum,
                      "per part: smallest c with C(c,2) >= C(t,2)a_i"});
    } else {
      rows.push_back({"multipartite-real", "n/a", nullptr, "needs t >= 2"});
    }
  }
  if (fam == "clique-power" && input.family.size() == 3 && input.family[2] == "2") {
    const int n = to_int(input.family[1], "N");
    std::string note;
    bool ok = false;
    try {
      const auto f = mols_for_order(n);
      ok = f.size() >= t;
      note = std::to_string(f.size()) + " MOLS of order " + std::to_string(n) + " constructed";
    } catch (const std::invalid_argument& e) {
      note = e.what();
    }
    if (ok) {
      rows.push_back({"mols", "exact", static_cast<std::int64_t>(t) * n, note});
    } else {
      rows.push_back({"mols", "n/a", nullptr, note.empty() ? "not enough MOLS" : note});
    }
  }
  if (ctx.json) {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back({{"source", r.source}, {"kind", r.kind}, {"value", r.value}, {"note", r.note}});
    ctx.emit(Json{{"t", t}, {"vertices", g.order()}, {"max_degree", g.max_degree()}, {"bounds", j}});
  } else {
    ctx.out << "graph: n=" << g.order() << " m=" << g.num_edges() << " max_degree=" << g.max_degree()
            << " t=" << t << '\n';
    char line[256];
    std::snprintf(line, sizeof line, "%-18s %-6s %10s  %s\n", "source", "kind", "value", "note");
    ctx.out << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%-18s %-6s %10s  %s\n", r.source.c_str(), r.kind.c_str(),
                    r.shown().c_str(), r.note.c_str());
      ctx.out << line;
    }
  }
  return kOk;
}

// ------------------------------------------------------------- construct

struct ConstructArgs {
  std::string method;
  GraphInput input;
  int t = 0;
  int n = 0;
  int k = 0;
  std::vector<std::string> parts;
  std::string scheme;
  int depth = 0;
  std::string mols_file;
  std::string output;
  std::string graph_output;
};

int cmd_construct(Context& ctx, const ConstructArgs& a) {
  Graph g;
  ToneColoring c;
  Json extra = Json::object();
  auto need_t = [&] {
    if (a.t < 1) throw std::invalid_argument("--t must be >= 1 for method " + a.method);
  };
  if (a.method == "large-t") {
    need_t();
    g = a.input.load();
    c = greedy_large_t_coloring(g, a.t);
  } else if (a.method == "decomp2") {
    g = a.input.load();
    auto res = two_tone_via_decomposition(g);
    c = std::move(res.coloring);
    const auto& cert = res.certificate;
    extra["proper_classes"] = cert.proper_classes;
    extra["class_counts"] = cert.class_counts;
    extra["palette_sizes"] = cert.palette_sizes;
    extra["bound"] = cert.bound;
  } else if (a.method == "mols") {
    need_t();
    MolsFamily f;
    if (!a.mols_file.empty()) {
      f = read_mols_file(a.mols_file);
    } else {
      if (a.n < 2) throw std::invalid_argument("--n must be >= 2 for method mols");
      f = mols_for_order(a.n);
    }
    g = cartesian_power(build_complete(f.order()), 2);
    c = mols_coloring_knn(f, a.t);
    extra["order"] = f.order();
    extra["family_size"] = f.size();
  } else if (a.method == "star") {
    need_t();
    if (a.k < 1) throw std::invalid_argument("--k must be >= 1 for method star");
    g = build_star(a.k);
    c = star_coloring(a.k, a.t);
  } else if (a.method == "multipartite") {
    need_t();
    const auto parts = to_int_list(a.parts, "part sizes");
    g = build_complete_multipartite(parts);
    c = multipartite_coloring(parts, a.t);
  } else if (a.method == "scheme") {
    if (a.scheme.empty()) throw std::invalid_argument("--scheme is required for method scheme");
    const auto scheme = parse_tree_scheme(a.scheme);
    auto st = tree_scheme_coloring(scheme, a.depth);
    g = st.tree;
    c = st.coloring;
    extra["scheme"] = to_string(scheme);
    extra["depth"] = a.depth;
    if (scheme == TreeScheme::T3_4tone || scheme == TreeScheme::T4_4tone) {
      const auto cond = check_tone4_conditions(st);
      extra["conditions_hold"] = cond.all();
      if (!cond.all()) extra["condition_failure"] = cond.first_failure;
    }
  } else {
    throw std::invalid_argument("unknown method '" + a.method +
                                "' (large-t, decomp2, mols, star, multipartite, scheme)");
  }
  const auto rep = verify(g, c);
  if (!a.output.empty()) write_coloring_file(a.output, c);
  if (!a.graph_output.empty()) write_graph_file(a.graph_output, g);
  const bool conditions_ok = !extra.contains("conditions_hold") || extra["conditions_hold"].get<bool>();
  if (ctx.json) {
    Json j{{"method", a.method}, {"t", c.t()}, {"vertices", g.order()}, {"palette_size", c.palette_size()},
           {"colors_used", rep.colors_used}, {"valid", rep.valid}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    ctx.emit(j);
  } else {
    ctx.out << "method " << a.method << "\nvertices " << g.order() << "\nt " << c.t() << "\ncolors_used "
            << rep.colors_used << "\npalette_size " << c.palette_size() << "\nvalid "
            << (rep.valid ? "yes" : "no") << '\n';
    for (auto it = extra.begin(); it != extra.end(); ++it) ctx.out << it.key() << ' ' << it.value().dump() << '\n';
    if (a.output.empty()) write_coloring(ctx.out, c);
  }
  return rep.valid && conditions_ok ? kOk : kInvalid;
}

// ------------------------------------------------------------- reproduce

struct Row {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass() const { return expected == computed; }
};

std::string solve_value(const Graph& g, int t) {
  const auto r = tau_exact(g, t, SearchBudget{}, threads_from_env());
  if (r.status != SolveStatus::exact) {
    return to_string(r.status) + " [" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
  }
  return std::to_string(r.lower);
}

std::string decide(const Graph& g, int t, int k) {
  return to_string(feasible(g, t, k, SearchBudget{}, threads_from_env()).verdict);
}

std::string scheme_value(TreeScheme s, int depth) {
  const auto st = tree_scheme_coloring(s, depth);
  const auto rep = verify(st.tree, st.coloring);
  bool ok = rep.valid;
  if (s == TreeScheme::T3_4tone || s == TreeScheme::T4_4tone) ok = ok && check_tone4_conditions(st).all();
  return ok ? std::to_string(st.coloring.palette_size()) : "invalid";
}

Graph prop73_tree() {
  // S_3 with two extra vertices hanging off leaf 1.
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
  return Graph(6, e);
}

std::vector<Row> reproduce_table(const std::string& table) {
  std::vector<Row> rows;
  if (table == "tone3-stars") {
    const int expect[] = {8, 9, 9, 10};
    for (int d = 2; d <= 5; ++d) {
      rows.push_back({"tau_3(S_" + std::to_string(d) + ")", std::to_string(expect[d - 2]),
                      solve_value(build_star(d), 3)});
    }
    rows.push_back({"S_5, t=3, k=9", "infeasible", decide(build_star(5), 3, 9)});
    rows.push_back({"S_6, t=3, k=10", "feasible", decide(build_star(6), 3, 10)});
    rows.push_back({"S_7, t=3, k=10", "feasible", decide(build_star(7), 3, 10)});
    rows.push_back({"T4_3tone depth 3 palette", "9", scheme_value(TreeScheme::T4_3tone, 3)});
    rows.push_back({"T7_3tone depth 3 palette", "10", scheme_value(TreeScheme::T7_3tone_fano, 3)});
    rows.push_back({"degree bound (5, 3)", "9", std::to_string(degree_lower_bound(5, 3))});
  } else if (table == "tone4-stars") {
    rows.push_back({"tau_4(S_2)", "11", solve_value(build_star(2), 4)});
    rows.push_back({"tau_4(S_3)", "13", solve_value(build_star(3), 4)});
    rows.push_back({"tau_4(S_4)", "14", solve_value(build_star(4), 4)});
    rows.push_back({"tau_4(P_4)", "12", solve_value(build_path(4), 4)});
    rows.push_back({"tau_4(P_5)", "12", solve_value(build_path(5), 4)});
    rows.push_back({"T3_4tone depth 3 palette", "13", scheme_value(TreeScheme::T3_4tone, 3)});
    rows.push_back({"T4_4tone depth 3 palette", "14", scheme_value(TreeScheme::T4_4tone, 3)});
  } else if (table == "prop73") {
    rows.push_back({"tau_5(S_3)", "17", solve_value(build_star(3), 5)});
    rows.push_back({"S_3 + 2 at a leaf, t=5, k=17", "infeasible", decide(prop73_tree(), 5, 17)});
    rows.push_back({"tau_5(S_3 + 2 at a leaf)", "18", solve_value(prop73_tree(), 5)});
  } else if (table == "mols-square") {
    for (int n : {3, 5, 7}) {
      const auto f = prime_mols(n);
      for (int t = 1; t <= n - 1; ++t) {
        const auto c = mols_coloring_knn(f, t);
        const auto g = cartesian_power(build_complete(n), 2);
        const bool ok = verify(g, c).valid && static_cast<std::int64_t>(t) * greedy_clique_size(g) == t * n;
        rows.push_back({"tau_" + std::to_string(t) + "(K_" + std::to_string(n) + "^2)",
                        std::to_string(t * n), ok ? std::to_string(colors_used(c)) : "invalid"});
      }
    }
    const auto f15 = mols_for_order(15);
    const auto c15 = mols_coloring_knn(f15, 2);
    const bool ok15 = verify(cartesian_power(build_complete(15), 2), c15).valid;
    rows.push_back({"tau_2(K_15^2) via MacNeish", "30", ok15 ? std::to_string(colors_used(c15)) : "invalid"});
  } else if (table == "paths") {
    for (int n = 1; n <= 6; ++n) {
      for (int t = 1; t <= 4; ++t) {
        rows.push_back({"tau_" + std::to_string(t) + "(P_" + std::to_string(n) + ")",
                        std::to_string(path_formula(n, t)), solve_value(build_path(n), t)});
      }
    }
  } else {
    throw std::invalid_argument("unknown table '" + table +
                                "' (tone3-stars, tone4-stars, prop73, mols-square, paths, all)");
  }
  return rows;
}

int cmd_reproduce(Context& ctx, const std::string& table) {
  std::vector<std::pair<std::string, std::vector<Row>>> tables;
  if (table == "all") {
    for (const char* name : {"tone3-stars", "tone4-stars", "prop73", "mols-square", "paths"}) {
      tables.emplace_back(name, reproduce_table(name));
    }
  } else {
    tables.emplace_back(table, reproduce_table(table));
  }
  bool all_pass = true;
  Json j = Json::array();
  for (const auto& [name, rows] : tables) {
    if (!ctx.json) ctx.out << "== " << name << '\n';
    for (const auto& r : rows) {
      all_pass = all_pass && r.pass();
      if (ctx.json) {
        j.push_back({{"table", name}, {"row", r.name}, {"expected", r.expected}, {"computed", r.computed},
                     {"pass", r.pass()}});
      } else {
        char line[256];
        std::snprintf(line, sizeof line, "%-32s expected %-12s computed %-12s %s\n", r.name.c_str(),
                      r.expected.c_str(), r.computed.c_str(), r.pass() ? "PASS" : "FAIL");
        ctx.out << line;
      }
    }
  }
  if (ctx.json) {
    ctx.emit(Json{{"pass", all_pass}, {"rows", j}});
  } else {
    ctx.out << (all_pass ? "all rows pass" : "MISMATCH") << '\n';
  }
  return all_pass ? kOk : kInvalid;
}

// ------------------------------------------------------------ experiment

struct ExperimentArgs {
  std::vector<std::string> gnp;
  int t = 2;
  int seeds = 1;
};

int cmd_experiment(Context& ctx, const ExperimentArgs& a) {
  if (a.gnp.size() != 3) throw std::invalid_argument("--gnp expects N C SEED");
  const int n = to_int(a.gnp[0], "N");
  const double c = std::stod(a.gnp[1]);
  const std::uint64_t seed0 = std::stoull(a.gnp[2]);
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  if (a.t < 1) throw std::invalid_argument("--t must be >= 1");
  if (a.seeds < 1) throw std::invalid_argument("--seeds must be >= 1");
  const double p = std::min(1.0, c / n);
  Json rows = Json::array();
  bool sandwich = true;
  if (!ctx.json) ctx.out << "seed      n  edges  max_deg  lower  heuristic  decomp2  upper  ratio\n";
  for (int s = 0; s < a.seeds; ++s) {
    const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(s);
    const Graph g = build_gnp(n, p, seed);
    const int delta = g.max_degree();
    std::int64_t lower = a.t;
    if (a.t >= 2 && delta >= 1) lower = degree_lower_bound(delta, a.t);
    if (delta >= 1) lower = std::max<std::int64_t>(lower, 2LL * a.t);
    std::int64_t heuristic = 0;
    for (std::int64_t cap = lower;; ++cap) {
      if (auto col = greedy_heuristic_coloring(g, a.t, static_cast<int>(cap))) {
        heuristic = colors_used(*col);
        break;
      }
    }
    std::optional<std::int64_t> decomp;
    if (a.t == 2) decomp = colors_used(two_tone_via_decomposition(g).coloring);
    const std::int64_t upper = decomp ? std::min(heuristic, *decomp) : heuristic;
    sandwich = sandwich && lower <= upper;
    const double scale = std::sqrt(static_cast<double>(a.t) * (a.t - 1) * delta);
    const std::optional<double> ratio =
        scale > 0 ? std::optional<double>(static_cast<double>(upper) / scale) : std::nullopt;
    Json row{{"seed", seed},       {"n", n},         {"edges", g.num_edges()}, {"max_degree", delta},
             {"lower", lower},     {"heuristic", heuristic}};
    row["decomp2"] = decomp ? Json(*decomp) : Json(nullptr);
    row["upper"] = upper;
    row["ratio"] = ratio ? Json(std::round(*ratio * 1e6) / 1e6) : Json(nullptr);
    rows.push_back(row);
    if (!ctx.json) {
      char line[256];
      std::snprintf(line, sizeof line, "%-6llu %6d %6d %8d %6lld %10lld %8s %6lld  %s\n",
                    static_cast<unsigned long long>(seed), n, g.num_edges(), delta,
                    static_cast<long long>(lower), static_cast<long long>(heuristic),
                    decomp ? std::to_string(*decomp).c_str() : "-", static_cast<long long>(upper),
                    ratio ? fixed(*ratio).c_str() : "-");
      ctx.out << line;
    }
  }
  if (ctx.json) ctx.emit(Json{{"t", a.t}, {"c", c}, {"rows", rows}});
  return sandwich ? kOk : kInvalid;
}

// ------------------------------------------------------------------ mols

struct MolsArgs {
  int prime = 0;
  int order = 0;
  std::string check;
  std::string output;
};

int cmd_mols(Context& ctx, const MolsArgs& a) {
  const int picked = (a.prime > 0) + (a.order > 0) + !a.check.empty();
  if (picked != 1) throw std::invalid_argument("give exactly one of --prime, --order, --check");
  MolsFamily f;
  if (a.prime > 0) {
    f = prime_mols(a.prime);
  } else if (a.order > 0) {
    f = mols_for_order(a.order);
  } else {
    f = read_mols_file(a.check);
  }
  if (!a.output.empty()) write_mols_file(a.output, f);
  const double beth = beth_lower_bound(f.order());
  if (ctx.json) {
    ctx.emit(Json{{"order", f.order()}, {"squares", f.size()}, {"verified", f.verified()},
                  {"beth_lower_bound", std::round(beth * 1e6) / 1e6}});
  } else {
    ctx.out << "order " << f.order() << "\nsquares " << f.size() << "\nverified "
            << (f.verified() ? "yes" : "no") << "\nbeth_lower_bound " << fixed(beth, 6)
            << " (n^(5/74), theoretical only)\n";
    if (a.output.empty() && a.check.empty()) write_mols(ctx.out, f);
  }
  return f.verified() ? kOk : kInvalid;
}

// ----------------------------------------------------------------- graph

int cmd_graph(Context& ctx, const GraphInput& input, const std::string& output) {
  const Graph g = input.load();
  if (output.empty()) {
    write_graph(ctx.out, g);
  } else {
    write_graph_file(output, g);
    if (ctx.json) {
      ctx.emit(Json{{"vertices", g.order()}, {"edges", g.num_edges()}});
    } else {
      ctx.out << "wrote n=" << g.order() << " m=" << g.num_edges() << " to " << output << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tonelab: t-tone graph coloring toolkit"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Emit a single JSON document");
  app.fallthrough();

  std::function<int()> action;

  std::string verify_graph, verify_coloring;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against a graph");
  verify_cmd->add_option("graph", verify_graph, "Graph file")->required();
  verify_cmd->add_option("coloring", verify_coloring, "Coloring file")->required();
  verify_cmd->callback([&] { action = [&] { return cmd_verify(ctx, verify_graph, verify_coloring); }; });

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute tau_t exactly (or a bracket)");
  solve.input.attach(solve_cmd);
  solve_cmd->add_option("--t", solve.t, "Tone parameter")->required();
  solve_cmd->add_option("--budget-nodes", solve.budget_nodes, "Search node cap");
  solve_cmd->add_option("--budget-ms", solve.budget_ms, "Wall-clock cap in milliseconds");
  solve_cmd->add_option("--emit-witness", solve.witness_path, "Write the witness coloring here");
  solve_cmd->add_option("--emit-cnf", solve.cnf_path, "Write a DIMACS CNF decision instance here");
  solve_cmd->add_option("--cnf-k", solve.cnf_k, "Palette size for --emit-cnf (default: value - 1)");
  solve_cmd->callback([&] { action = [&] { return cmd_solve(ctx, solve); }; });

  GraphInput bound_input;
  int bound_t = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate every applicable closed-form bound");
  bound_input.attach(bound_cmd);
  bound_cmd->add_option("--t", bound_t, "Tone parameter")->required();
  bound_cmd->callback([&] { action = [&] { return cmd_bound(ctx, bound_input, bound_t); }; });

  ConstructArgs cons;
  auto* cons_cmd = app.add_subcommand("construct", "Build a coloring with one of the constructions");
  cons_cmd->add_option("--method", cons.method, "large-t | decomp2 | mols | star | multipartite | scheme")
      ->required();
  cons.input.attach(cons_cmd);
  cons_cmd->add_option("--t", cons.t, "Tone parameter");
  cons_cmd->add_option("--n", cons.n, "MOLS order");
  cons_cmd->add_option("--k", cons.k, "Star leaves");
  cons_cmd->add_option("--parts", cons.parts, "Part sizes, comma separated");
  cons_cmd->add_option("--scheme", cons.scheme, "T4_3tone | T7_3tone | T3_4tone | T4_4tone");
  cons_cmd->add_option("--depth", cons.depth, "Tree depth for --method scheme");
  cons_cmd->add_option("--mols-file", cons.mols_file, "Load the MOLS family from a file");
  cons_cmd->add_option("-o,--output", cons.output, "Write the coloring here");
  cons_cmd->add_option("--graph-out", cons.graph_output, "Write the colored graph here");
  cons_cmd->callback([&] { action = [&] { return cmd_construct(ctx, cons); }; });

  std::string table;
  auto* rep_cmd = app.add_subcommand("reproduce", "Recompute a table of known values");
  rep_cmd->add_option("--table", table, "tone3-stars | tone4-stars | prop73 | mols-square | paths | all")
      ->required();
  rep_cmd->callback([&] { action = [&] { return cmd_reproduce(ctx, table); }; });

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Bounds on random graphs G(n, c/n)");
  exp_cmd->add_option("--gnp", exp.gnp, "N C SEED")->expected(3)->required();
  exp_cmd->add_option("--t", exp.t, "Tone parameter");
  exp_cmd->add_option("--seeds", exp.seeds, "Number of consecutive seeds");
  exp_cmd->callback([&] { action = [&] { return cmd_experiment(ctx, exp); }; });

  MolsArgs mols;
  auto* mols_cmd = app.add_subcommand("mols", "Build or check a family of MOLS");
  mols_cmd->add_option("--prime", mols.prime, "Prime order p: p-1 squares");
  mols_cmd->add_option("--order", mols.order, "Squarefree order via MacNeish products");
  mols_cmd->add_option("--check", mols.check, "Validate a Latin square file");
  mols_cmd->add_option("-o,--output", mols.output, "Write the family here");
  mols_cmd->callback([&] { action = [&] { return cmd_mols(ctx, mols); }; });

  GraphInput graph_input;
  std::string graph_output;
  auto* graph_cmd = app.add_subcommand("graph", "Write a named family in the graph format");
  graph_input.attach(graph_cmd);
  graph_cmd->add_option("-o,--output", graph_output, "Output path (default stdout)");
  graph_cmd->callback([&] { action = [&] { return cmd_graph(ctx, graph_input, graph_output); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << " (required threshold " << e.required() << ")\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace tonelab::cli
