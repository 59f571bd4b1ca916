#include "cli/app.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bootperc/analysis.hpp"
#include "bootperc/bounds.hpp"
#include "bootperc/builders.hpp"
#include "bootperc/constructions.hpp"
#include "bootperc/corpus.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/extremal.hpp"
#include "bootperc/graph_io.hpp"
#include "bootperc/grid.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/solver.hpp"
#include "bootperc/suites.hpp"
#include "cli/expression.hpp"
#include "cli/render.hpp"

namespace bootperc::cli {

namespace {

using nlohmann::json;

/// Raised for malformed command arguments that CLI11 cannot check itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int r = 2;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::string format = "json";
  std::string out_path;
  bool stats = false;
  std::optional<long> time_limit_ms;

  std::string expression;
  std::string construction;
  std::vector<std::string> params;
  std::string suite;
  std::optional<int> max;
  std::size_t n_max = 0;
  std::string seeds;
  std::string topic;

  SolveOptions solve() const {
    SolveOptions o;
    o.budget = budget;
    o.workers = workers;
    if (time_limit_ms) o.time_limit = std::chrono::milliseconds(*time_limit_ms);
    return o;
  }
};

struct Output {
  json doc;
  std::optional<std::string> dot;
  int code = kSuccess;
};

long parse_int(const std::string& text, const std::string& what) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
  return value;
}

Vertex parse_vertex(const std::string& text, const Graph& g, const std::string& what) {
  const long v = parse_int(text, what);
  if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
    throw UsageError(what + " " + text + " is not a vertex (order " + std::to_string(g.order()) + ")");
  }
  return static_cast<Vertex>(v);
}

json labels_of(const Graph& g, const VertexSet& s) {
  json out = json::array();
  s.for_each([&](Vertex v) { out.push_back(g.label(v)); });
  return out;
}

json solver_json(const SolverReport& report, const Graph& g, bool stats) {
  json j = report;
  if (!stats) {
    j.erase("wall_time_ms");
    j.erase("sets_examined");
  }
  if (g.has_labels()) j["witness_labels"] = labels_of(g, report.witness);
  return j;
}

Output cmd_compute(const RunConfig& cfg) {
  const Graph g = parse_expression(cfg.expression);
  const auto report = min_percolating(g, cfg.r, cfg.solve());
  json doc{{"graph", cfg.expression}, {"order", g.order()}, {"edges", g.edge_count()}, {"r", cfg.r}};
  doc.update(solver_json(report, g, cfg.stats));
  return {doc, export_dot(g, report.witness), report.optimal() ? kSuccess : kInconclusive};
}

void expect_params(const RunConfig& cfg, std::size_t count, const std::string& usage) {
  if (cfg.params.size() != count) {
    throw UsageError("construct " + cfg.construction + " expects: " + usage);
  }
}

Output finish_construction(json doc, const Graph& product, const VertexSet& seeds, int r) {
  const bool ok = propagates(product, r, seeds);
  doc["order"] = product.order();
  doc["size"] = seeds.size();
  doc["seeds"] = seeds.members();
  doc["seed_labels"] = labels_of(product, seeds);
  doc["verified"] = ok;
  return {doc, export_dot(product, seeds), ok ? kSuccess : kVerificationFailure};
}

Output cmd_construct(const RunConfig& cfg) {
  const std::string& name = cfg.construction;
  const auto& p = cfg.params;
  if (name == "grid") {
    expect_params(cfg, 2, "N M");
    const int n = static_cast<int>(parse_int(p[0], "N"));
    const int m = static_cast<int>(parse_int(p[1], "M"));
    const auto plan = plan_grid_construction(n, m);
    json doc{{"construction", "grid"}, {"n", n}, {"m", m}, {"case", to_string(plan.case_tag)},
             {"transposed", plan.transposed}, {"formula", grid_formula(n, m)}};
    json comps = json::array();
    for (const auto& c : plan.components) {
      comps.push_back({{"piece", to_string(c.piece)},
                       {"cells", c.cells.size()},
                       {"seeds", c.seeds().size()},
                       {"repaired", c.repaired}});
    }
    doc["components"] = comps;
    json cells = json::array();
    for (const auto& c : plan.seeds()) cells.push_back({c.x, c.y});
    doc["cells"] = cells;
    return finish_construction(doc, build_grid(n, m), grid_cells_to_set(n, m, plan.seeds()), 2);
  }

  const std::size_t arity = name == "layer" ? 3 : name == "double" ? 4 : name == "punctured" ? 4 : 2;
  if (name != "layer" && name != "double" && name != "punctured" && name != "odd-order" && name != "odd-cycle") {
    throw UsageError("unknown construction '" + name + "'");
  }
  const std::string usage = name == "layer"       ? "G H LAYER"
                            : name == "double"    ? "G H H1 H2"
                            : name == "punctured" ? "G H V|auto X"
                                                  : "G H";
  expect_params(cfg, arity, usage);
  const Graph g = parse_expression(p[0]);
  const Graph h = parse_expression(p[1]);
  const Graph product = direct_product(g, h);
  json doc{{"construction", name}, {"g", p[0]}, {"h", p[1]}, {"r", cfg.r}};

  if (name == "layer") {
    const Vertex layer = parse_vertex(p[2], h, "layer");
    return finish_construction(doc, product, layer_set(g, h, layer), cfg.r);
  }
  if (name == "double") {
    const Vertex h1 = parse_vertex(p[2], h, "H1");
    const Vertex h2 = parse_vertex(p[3], h, "H2");
    const auto base = min_percolating(g, cfg.r, cfg.solve());
    if (!base.optimal()) {
      doc["error"] = "solver budget exhausted computing m(G, r)";
      return {doc, std::nullopt, kInconclusive};
    }
    doc["base_value"] = *base.value;
    doc["base_seeds"] = base.witness.members();
    return finish_construction(doc, product, double_layer_set(g, h, base.witness, h1, h2, cfg.r), cfg.r);
  }
  if (name == "punctured") {
    Vertex v = 0;
    if (p[2] == "auto") {
      const auto found = find_puncture_vertex(g, cfg.r);
      if (!found) throw HypothesisError("no vertex of G has " + std::to_string(cfg.r) +
                                        " neighbours of degree > " + std::to_string(cfg.r));
      v = *found;
    } else {
      v = parse_vertex(p[2], g, "V");
    }
    const Vertex x = parse_vertex(p[3], h, "X");
    doc["vertex"] = v;
    return finish_construction(doc, product, punctured_layer_set(g, h, v, x, cfg.r), cfg.r);
  }
  doc["r"] = 2;
  const VertexSet set = name == "odd-order" ? odd_order_set(g, h) : odd_cycle_set(g, h);
  doc["bound"] = g.order() - 1;
  return finish_construction(doc, product, set, 2);
}

Output cmd_verify(const RunConfig& cfg) {
  SuiteOptions o;
  o.max = cfg.max;
  o.workers = cfg.workers;
  o.budget = cfg.budget;
  const auto report = run_suite(cfg.suite, o);
  json doc = report;
  int code = kSuccess;
  for (const auto& c : report.claims) {
    if (c.passed()) continue;
    if (c.failures > 0) code = kVerificationFailure;
    else if (code == kSuccess) code = kInconclusive;
  }
  return {doc, std::nullopt, code};
}

std::string edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

Output cmd_enumerate(const RunConfig& cfg) {
  const auto found = enumerate_extremal_bipartite(cfg.n_max);
  json graphs = json::array();
  for (const auto& c : found) {
    graphs.push_back({{"order", c.graph.order()},
                      {"size", c.graph.edge_count()},
                      {"labeled_count", c.labeled_count},
                      {"edge_list", edge_list(c.graph)},
                      {"edges", c.graph.edges()},
                      {"witness", c.witness.members()}});
  }
  json doc{{"n_max", cfg.n_max}, {"count", found.size()}, {"graphs", graphs}};
  return {doc, std::nullopt, kSuccess};
}

VertexSet parse_seeds(const std::string& text, const Graph& g) {
  VertexSet seeds(g.order());
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto start = token.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    const auto end = token.find_last_not_of(' ');
    seeds.insert(parse_vertex(token.substr(start, end - start + 1), g, "seed"));
  }
  return seeds;
}

Output cmd_trace(const RunConfig& cfg) {
  const Graph g = parse_expression(cfg.expression);
  const VertexSet seeds = parse_seeds(cfg.seeds, g);
  json doc{{"graph", cfg.expression}, {"order", g.order()}, {"seeds", seeds.members()}};
  doc["trace"] = trace(g, cfg.r, seeds);
  return {doc, export_dot(g, seeds), kSuccess};
}

json value_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

Output cmd_explore(const RunConfig& cfg) {
  const auto options = cfg.solve();
  json rows = json::array();
  bool inconclusive = false;
  auto solve = [&](const Graph& g, int r) {
    const auto value = min_percolating(g, r, options).value;
    inconclusive = inconclusive || !value;
    return value;
  };
  const int max = cfg.max.value_or(6);
  if (cfg.topic == "cycle-path") {
    for (int n = 3; n <= max; ++n) {
      for (int m = 2; m <= max; ++m) {
        const auto v = solve(direct_product(build_cycle(n), build_path(m)), 2);
        rows.push_back({{"n", n}, {"m", m}, {"value", value_json(v)}});
      }
    }
  } else if (cfg.topic == "complete-factor" || cfg.topic == "triangle-factor") {
    for (const auto& entry : corpus_graphs()) {
      const auto order = static_cast<int>(entry.graph.order());
      if (order < 3 || order > max) continue;
      if (cfg.topic == "complete-factor") {
        for (int r = 2; r <= 3; ++r) {
          const auto v = solve(direct_product(entry.graph, build_complete(2 * r)), r);
          rows.push_back({{"graph", entry.name}, {"factor", "K" + std::to_string(2 * r)}, {"r", r},
                          {"value", value_json(v)}, {"equals_r", v && *v == static_cast<std::size_t>(r)}});
        }
      } else {
        const auto v = solve(direct_product(entry.graph, build_complete(3)), cfg.r);
        rows.push_back({{"graph", entry.name}, {"r", cfg.r}, {"value", value_json(v)}, {"order", order}});
      }
    }
  } else if (cfg.topic == "min-factor" || cfg.topic == "submultiplicative") {
    for (const auto& pair : corpus_pairs()) {
      if (static_cast<int>(pair.g.order() * pair.h.order()) > 4 * max * max) continue;
      const auto vg = solve(pair.g, pair.r);
      const auto vh = solve(pair.h, pair.r);
      const auto vp = solve(direct_product(pair.g, pair.h), pair.r);
      json row{{"id", pair.id}, {"m_g", value_json(vg)}, {"m_h", value_json(vh)}, {"m_product", value_json(vp)}};
      if (vg && vh && vp) {
        row["holds"] = cfg.topic == "min-factor" ? std::min(*vg, *vh) <= *vp : *vp <= *vg * *vh;
      }
      rows.push_back(row);
    }
  } else {
    throw UsageError("unknown topic '" + cfg.topic + "'");
  }
  json doc{{"topic", cfg.topic}, {"note", "observation, not theorem"}, {"rows", rows}};
  return {doc, std::nullopt, inconclusive ? kInconclusive : kSuccess};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bootstrap percolation on direct products of graphs", "bootperc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--r", cfg.r, "Infection threshold")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Closure evaluations allowed to the solver")
      ->envname("BOOTPERC_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Solver worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
  app.add_option("--out", cfg.out_path, "Write output to this file");
  app.add_option("--time-limit", cfg.time_limit_ms, "Solver wall-clock limit in milliseconds")
      ->check(CLI::PositiveNumber);
  app.add_flag("--stats", cfg.stats, "Include timing and search counters");

  auto* compute = app.add_subcommand("compute", "Exact m(G, r) for a graph expression");
  compute->add_option("graph", cfg.expression, "Graph expression, e.g. \"path 7 x path 5\"")->required();

  auto* construct = app.add_subcommand("construct", "Emit and verify a named construction");
  construct->add_option("name", cfg.construction, "grid | layer | double | punctured | odd-order | odd-cycle")
      ->required();
  construct->add_option("params", cfg.params, "Construction parameters");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max", cfg.max, "Size limit for the suite")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Bipartite graphs with m(G, 2) = |V|/2");
  enumerate->add_option("n_max", cfg.n_max, "Largest order")->required();

  auto* tracer = app.add_subcommand("trace", "Round-by-round infection from a seed set");
  tracer->add_option("graph", cfg.expression, "Graph expression")->required();
  tracer->add_option("--seeds", cfg.seeds, "Comma-separated seed vertices")->required();

  auto* explore = app.add_subcommand("explore", "Empirical probes (observations, not theorems)");
  explore->add_option("topic", cfg.topic, "cycle-path | complete-factor | triangle-factor | min-factor | submultiplicative")
      ->required();
  explore->add_option("--max", cfg.max, "Size limit")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  Output result;
  try {
    if (*compute) result = cmd_compute(cfg);
    else if (*construct) result = cmd_construct(cfg);
    else if (*verify) result = cmd_verify(cfg);
    else if (*enumerate) result = cmd_enumerate(cfg);
    else if (*tracer) result = cmd_trace(cfg);
    else result = cmd_explore(cfg);
  } catch (const ExpressionError& e) {
    err << e.render();
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::string text;
  if (cfg.format == "dot") {
    if (!result.dot) {
      err << "error: dot output is not available for this command\n";
      return kUsageError;
    }
    text = *result.dot;
  } else if (cfg.format == "table") {
    text = render_table(result.doc);
  } else {
    text = result.doc.dump(2) + "\n";
  }

  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kUsageError;
    }
    file << text;
  }
  return result.code;
}

}  // namespace bootperc::cli
