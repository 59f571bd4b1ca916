#include "bootperc/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bootperc/analysis.hpp"
#include "bootperc/bounds.hpp"
#include "bootperc/builders.hpp"
#include "bootperc/constructions.hpp"
#include "bootperc/corpus.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/extremal.hpp"
#include "bootperc/grid.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

namespace {

using nlohmann::json;

SolveOptions solve_options(const SuiteOptions& o) {
  SolveOptions s;
  s.budget = o.budget;
  s.workers = o.workers;
  return s;
}

// Records one instance; `ok` empty means the solver ran out of budget.
void tally(ClaimResult& claim, std::optional<bool> ok, json detail) {
  ++claim.instances;
  if (!ok) {
    ++claim.inconclusive;
    detail["inconclusive"] = true;
    claim.witnesses.push_back(std::move(detail));
    return;
  }
  if (!*ok) {
    ++claim.failures;
    detail["failed"] = true;
  }
  claim.witnesses.push_back(std::move(detail));
}

std::optional<std::size_t> solve(const Graph& g, int r, const SuiteOptions& o) {
  return min_percolating(g, r, solve_options(o)).value;
}

json seeds_json(const std::vector<GridCoord>& cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back({c.x, c.y});
  return out;
}

SuiteReport grid_theorem(const SuiteOptions& o) {
  const int max = o.max.value_or(7);
  SuiteReport report{"grid-theorem", {}};

  ClaimResult solver{"grid-solver", "m(P_n x P_m, 2) equals the grid formula, 3 <= m <= n <= max"};
  ClaimResult narrow{"grid-width-two", "m(P_2 x P_m, 2) equals the grid formula, 2 <= m <= 10"};
  ClaimResult built{"grid-construction",
                    "the grid construction has formula size, percolates and matches the solver"};
  for (int n = 3; n <= max; ++n) {
    for (int m = 3; m <= n; ++m) {
      const auto value = solve(build_grid(n, m), 2, o);
      const int formula = grid_formula(n, m);
      json detail{{"n", n}, {"m", m}, {"formula", formula}, {"value", nullptr}};
      if (value) detail["value"] = *value;
      tally(solver, value ? std::optional<bool>(*value == static_cast<std::size_t>(formula)) : std::nullopt,
            detail);
      if (n == 3 && m == 3) continue;
      json cdetail{{"n", n}, {"m", m}};
      try {
        const auto plan = plan_grid_construction(n, m);
        const auto seeds = plan.seeds();
        cdetail["case"] = std::string(to_string(plan.case_tag));
        cdetail["seeds"] = seeds_json(seeds);
        const bool ok = seeds.size() == static_cast<std::size_t>(formula) &&
                        (!value || *value == seeds.size());
        tally(built, ok, cdetail);
      } catch (const Error& e) {
        cdetail["error"] = e.what();
        tally(built, false, cdetail);
      }
    }
  }
  for (int m = 2; m <= 10; ++m) {
    const auto value = solve(build_grid(2, m), 2, o);
    const int formula = grid_formula(2, m);
    json detail{{"n", 2}, {"m", m}, {"formula", formula}, {"value", nullptr}};
    if (value) detail["value"] = *value;
    tally(narrow, value ? std::optional<bool>(*value == static_cast<std::size_t>(formula)) : std::nullopt,
          detail);
  }
  report.claims = {solver, narrow, built};
  return report;
}

SuiteReport perimeter(const SuiteOptions& o) {
  const int max = o.max.value_or(40);
  SuiteReport report{"perimeter", {}};
  ClaimResult agree{"perimeter-closed-form",
                    "closed-form component perimeters equal the embedding evaluator"};
  ClaimResult sandwich{"perimeter-sandwich",
                       "perimeter bound = construction size = grid formula, 3 <= m <= n <= max"};
  for (int n = 3; n <= max; ++n) {
    for (int m = 3; m <= n; ++m) {
      if (n == 3 && m == 3) continue;
      json detail{{"n", n}, {"m", m}};
      try {
        const auto b = perimeter_lower_bound(n, m);
        json parts = json::array();
        for (const auto& c : b.components) parts.push_back({{"piece", to_string(c.piece)}, {"perimeter", c.perimeter}});
        detail["components"] = parts;
        tally(agree, true, detail);
        detail["lower"] = b.lower;
        detail["upper"] = b.upper;
        detail["formula"] = b.formula;
        tally(sandwich, b.lower == b.formula && b.formula == b.upper, detail);
      } catch (const Error& e) {
        detail["error"] = e.what();
        tally(agree, false, detail);
        tally(sandwich, false, detail);
      }
    }
  }
  report.claims = {agree, sandwich};
  return report;
}

SuiteReport characterization(const SuiteOptions& o) {
  const int max = o.max.value_or(6);
  if (max > 7) throw PreconditionError("characterization suite is limited to 7 vertices");
  SuiteReport report{"characterization", {}};
  ClaimResult claim{"extremal-characterization",
                    "m(G x K2, 2) = |V(G)| iff G is an odd cycle or bipartite with m(G, 2) = |V(G)|/2"};
  for (int n = 3; n <= max; ++n) {
    std::size_t graphs = 0;
    std::size_t extremal = 0;
    std::size_t counterexamples = 0;
    std::size_t inconclusive = 0;
    for_each_labeled_graph(static_cast<std::size_t>(n), 2, [&](const Graph& g) {
      ++graphs;
      try {
        const auto v = check_extremal_characterization(g, solve_options(o));
        if (v.lhs) ++extremal;
        if (v.counterexample()) {
          ++counterexamples;
          json bad{{"edges", g.edges()}, {"verdict", v}};
          claim.witnesses.push_back(bad);
        }
      } catch (const PreconditionError&) {
        throw;
      } catch (const Error&) {
        ++inconclusive;
      }
    });
    claim.instances += graphs;
    claim.failures += counterexamples;
    claim.inconclusive += inconclusive;
    claim.witnesses.push_back({{"n", n}, {"graphs", graphs}, {"extremal", extremal}});
  }
  report.claims = {claim};
  return report;
}

SuiteReport upper_bounds(const SuiteOptions& o) {
  SuiteReport report{"upper-bounds", {}};
  ClaimResult twice{"double-layer", "S x {h, h'} percolates with size 2 m(G, r) and m(G x H, r) <= 2 m(G, r)"};
  ClaimResult layer{"layer", "a G-layer percolates and m(G x H, r) <= |V(G)|"};
  ClaimResult punctured{"punctured-layer",
                        "when the puncture hypothesis holds, a punctured layer percolates and m(G x H, r) < |V(G)|"};
  ClaimResult half{"half-product", "m(G x H, 2) <= |V(G x H)| / 2 when both minimum degrees are >= 2"};
  ClaimResult odd_order{"odd-order", "odd-order construction percolates with at most |V(G)| - 1 vertices"};
  ClaimResult odd_cycle{"odd-cycle", "odd-cycle construction percolates with at most |V(G)| - 1 vertices"};

  for (const auto& pair : corpus_pairs()) {
    const Graph product = direct_product(pair.g, pair.h);
    const auto base = min_percolating(pair.g, pair.r, solve_options(o));
    const auto whole = solve(product, pair.r, o);
    const std::size_t order = pair.g.order();
    json detail{{"id", pair.id}, {"product_value", nullptr}};
    if (whole) detail["product_value"] = *whole;

    if (!base.value) {
      tally(twice, std::nullopt, detail);
    } else {
      const auto [h1, h2] = pair.h.edges().front();
      const auto set = double_layer_set(pair.g, pair.h, base.witness, h1, h2, pair.r);
      json d = detail;
      d["base_value"] = *base.value;
      d["size"] = set.size();
      const bool ok = set.size() == 2 * *base.value && (!whole || *whole <= set.size());
      tally(twice, whole ? std::optional<bool>(ok) : std::nullopt, d);
    }

    {
      const auto set = layer_set(pair.g, pair.h, 0);
      json d = detail;
      d["size"] = set.size();
      const bool ok = set.size() == order && propagates(product, pair.r, set) && (!whole || *whole <= order);
      tally(layer, whole ? std::optional<bool>(ok) : std::nullopt, d);
    }

    if (const auto v = find_puncture_vertex(pair.g, pair.r)) {
      json d = detail;
      d["vertex"] = *v;
      try {
        const auto set = punctured_layer_set(pair.g, pair.h, *v, 0, pair.r);
        d["size"] = set.size();
        const bool ok = set.size() == order - 1 && (!whole || *whole < order);
        tally(punctured, whole ? std::optional<bool>(ok) : std::nullopt, d);
      } catch (const Error& e) {
        d["error"] = e.what();
        tally(punctured, false, d);
      }
    }

    if (pair.r == 2 && min_degree(pair.g) >= 2 && min_degree(pair.h) >= 2) {
      json d = detail;
      d["limit"] = product.order() / 2;
      tally(half, whole ? std::optional<bool>(*whole <= product.order() / 2) : std::nullopt, d);
    }

    if (pair.r == 2 && min_degree(pair.g) >= 2 && max_degree(pair.g) >= 3) {
      if (order % 2 == 1) {
        json d = detail;
        try {
          const auto set = odd_order_set(pair.g, pair.h);
          d["size"] = set.size();
          tally(odd_order, set.size() <= order - 1, d);
        } catch (const Error& e) {
          d["error"] = e.what();
          tally(odd_order, false, d);
        }
      }
      if (min_degree(pair.g) == 2 && contains_odd_cycle(pair.g).found) {
        json d = detail;
        try {
          const auto set = odd_cycle_set(pair.g, pair.h);
          d["size"] = set.size();
          tally(odd_cycle, set.size() <= order - 1, d);
        } catch (const Error& e) {
          d["error"] = e.what();
          tally(odd_cycle, false, d);
        }
      }
    }
  }
  report.claims = {twice, layer, punctured, half, odd_order, odd_cycle};
  return report;
}

void expect_value(ClaimResult& claim, const std::string& name, const Graph& g, int r,
                  const std::function<bool(std::size_t)>& accept, const SuiteOptions& o) {
  const auto value = solve(g, r, o);
  json detail{{"instance", name}, {"r", r}, {"value", nullptr}};
  if (value) detail["value"] = *value;
  tally(claim, value ? std::optional<bool>(accept(*value)) : std::nullopt, detail);
}

SuiteReport families(const SuiteOptions& o) {
  SuiteReport report{"families", {}};
  ClaimResult kbip{"complete-bipartite", "m(K_{r,r}, r) = r and m(K_{r,r} x K2, r) = 2r for r = 2, 3, 4"};
  for (int r = 2; r <= 4; ++r) {
    const Graph k = build_complete_bipartite(r, r);
    const auto ur = static_cast<std::size_t>(r);
    expect_value(kbip, "K" + std::to_string(r) + "," + std::to_string(r), k, r,
                 [ur](std::size_t v) { return v == ur; }, o);
    expect_value(kbip, "K" + std::to_string(r) + "," + std::to_string(r) + " x K2",
                 direct_product(k, build_complete(2)), r, [ur](std::size_t v) { return v == 2 * ur; }, o);
  }
  ClaimResult cube{"hypercube", "m(Q_n, n) = 2^(n-1) for n = 2, 3, 4"};
  for (int d = 2; d <= 4; ++d) {
    const std::size_t want = std::size_t{1} << (d - 1);
    expect_value(cube, "Q" + std::to_string(d), build_hypercube(d), d,
                 [want](std::size_t v) { return v == want; }, o);
  }
  ClaimResult star{"star-family", "m((K_{1,n-1} + e) x K_{1,n-1}, 2) = (n-1)(n-3) + 2 for n = 5, 6"};
  for (std::size_t n = 5; n <= 6; ++n) {
    const std::size_t want = (n - 1) * (n - 3) + 2;
    expect_value(star, "star" + std::to_string(n) + "+e x star" + std::to_string(n),
                 direct_product(build_star_plus_edge(n), build_star(n)), 2,
                 [want](std::size_t v) { return v == want; }, o);
  }
  ClaimResult bfam{"b-family", "m(B1, 2) = 3, m(B2, 2) = 4, m(B3, 2) <= 4"};
  expect_value(bfam, "B1", build_b_family(1), 2, [](std::size_t v) { return v == 3; }, o);
  expect_value(bfam, "B2", build_b_family(2), 2, [](std::size_t v) { return v == 4; }, o);
  expect_value(bfam, "B3", build_b_family(3), 2, [](std::size_t v) { return v <= 4; }, o);
  ClaimResult cycles{"even-cycles", "m(C_{4k+2}, 2) = 2k + 1 for k = 1..4"};
  for (std::size_t k = 1; k <= 4; ++k) {
    expect_value(cycles, "C" + std::to_string(4 * k + 2), build_cycle(4 * k + 2), 2,
                 [k](std::size_t v) { return v == 2 * k + 1; }, o);
  }
  ClaimResult complete{"complete-factor", "m(G x K_n, r) = r for corpus graphs G of order 3..6, n = 2r"};
  complete.observation = true;
  SuiteOptions capped = o;
  capped.budget = std::min<std::uint64_t>(o.budget, 2'000'000);
  for (const auto& entry : corpus_graphs()) {
    if (entry.graph.order() < 3 || entry.graph.order() > 6) continue;
    for (int r = 2; r <= 3; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      expect_value(complete, entry.name + " x K" + std::to_string(2 * r),
                   direct_product(entry.graph, build_complete(2 * ur)), r,
                   [ur](std::size_t v) { return v == ur; }, capped);
    }
  }
  report.claims = {kbip, cube, star, bfam, cycles, complete};
  return report;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"grid-theorem", "characterization", "upper-bounds",
                                              "perimeter", "families"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "grid-theorem") return grid_theorem(options);
  if (name == "characterization") return characterization(options);
  if (name == "upper-bounds") return upper_bounds(options);
  if (name == "perimeter") return perimeter(options);
  if (name == "families") return families(options);
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

void to_json(nlohmann::json& j, const ClaimResult& c) {
  j = {{"claim", c.id},
       {"statement", c.statement},
       {"observation", c.observation},
       {"instances", c.instances},
       {"failures", c.failures},
       {"inconclusive", c.inconclusive},
       {"passed", c.passed()},
       {"witnesses", c.witnesses}};
}

void to_json(nlohmann::json& j, const SuiteReport& r) {
  j = {{"suite", r.suite}, {"passed", r.passed()}, {"claims", r.claims}};
}

}  // namespace bootperc
