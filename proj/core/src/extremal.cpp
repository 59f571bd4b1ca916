#include "bootperc/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "bootperc/analysis.hpp"
#include "bootperc/builders.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

namespace {

std::size_t solve_value(const Graph& g, const SolveOptions& options, const char* what) {
  const auto report = min_percolating(g, 2, options);
  if (!report.value) throw Error(std::string("solver budget exhausted on ") + what);
  return *report.value;
}

}  // namespace

ExtremalVerdict check_extremal_characterization(const Graph& g, const SolveOptions& options) {
  if (!is_connected(g)) throw PreconditionError("characterization needs a connected graph");
  if (min_degree(g) < 2) throw PreconditionError("characterization needs minimum degree >= 2");
  ExtremalVerdict v;
  v.order = g.order();
  v.product_value = solve_value(direct_product(g, build_complete(2)), options, "G x K2");
  v.lhs = v.product_value == v.order;
  v.odd_cycle = is_odd_cycle_graph(g);
  v.bipartite = is_bipartite(g).bipartite;
  if (v.bipartite) {
    v.base_value = solve_value(g, options, "G");
    v.rhs = 2 * *v.base_value == v.order;
  }
  v.rhs = v.rhs || v.odd_cycle;
  return v;
}

void to_json(nlohmann::json& j, const ExtremalVerdict& v) {
  j = {{"order", v.order},         {"product_value", v.product_value},
       {"odd_cycle", v.odd_cycle}, {"bipartite", v.bipartite},
       {"base_value", nullptr},    {"lhs", v.lhs},
       {"rhs", v.rhs},             {"counterexample", v.counterexample()}};
  if (v.base_value) j["base_value"] = *v.base_value;
}

void for_each_labeled_graph(std::size_t n, std::size_t min_deg,
                            const std::function<void(const Graph&)>& visit) {
  if (n > 7) throw PreconditionError("labelled enumeration is limited to 7 vertices");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::size_t> degree(n);
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(degree.begin(), degree.end(), 0);
    edges.clear();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) {
        edges.push_back(slots[i]);
        ++degree[slots[i].first];
        ++degree[slots[i].second];
      }
    }
    if (n > 0 && *std::min_element(degree.begin(), degree.end()) < min_deg) continue;
    const Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) visit(g);
  }
}

std::string refinement_signature(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  std::ostringstream out;
  auto histogram = [&] {
    std::vector<std::size_t> sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    for (auto c : sorted) out << c << ',';
    out << '|';
  };
  histogram();
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      keys[v].first = colour[v];
      for (Vertex u : g.neighbor_list(v)) keys[v].second.push_back(colour[u]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    // Canonical names: rank of the key among the distinct keys.
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> names;
    for (const auto& k : keys) names.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, name] : names) name = next++;
    std::vector<std::size_t> refined(n);
    for (Vertex v = 0; v < n; ++v) refined[v] = names.at(keys[v]);
    const bool stable =
        std::set<std::size_t>(refined.begin(), refined.end()).size() ==
        std::set<std::size_t>(colour.begin(), colour.end()).size();
    colour = std::move(refined);
    histogram();
    if (stable) break;
  }
  return out.str();
}

std::vector<ExtremalCandidate> enumerate_extremal_bipartite(std::size_t n_max) {
  if (n_max > kMaxExtremalOrder) {
    throw PreconditionError("enumeration is budget-guarded to n_max <= " +
                            std::to_string(kMaxExtremalOrder));
  }
  std::vector<ExtremalCandidate> out;
  std::map<std::string, std::size_t> seen;
  for (std::size_t n = 4; n <= n_max; n += 2) {
    for (std::size_t a = 2; 2 * a <= n; ++a) {
      std::vector<Edge> slots;
      for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = static_cast<Vertex>(a); v < n; ++v) slots.emplace_back(u, v);
      }
      const std::uint64_t total = std::uint64_t{1} << slots.size();
      std::vector<std::size_t> degree(n);
      std::vector<Edge> edges;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(degree.begin(), degree.end(), 0);
        edges.clear();
        for (std::size_t i = 0; i < slots.size(); ++i) {
          if ((mask >> i) & 1U) {
            edges.push_back(slots[i]);
            ++degree[slots[i].first];
            ++degree[slots[i].second];
          }
        }
        if (*std::min_element(degree.begin(), degree.end()) < 2) continue;
        const Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        const auto report = min_percolating(g, 2);
        if (!report.value) throw Error("solver budget exhausted during enumeration");
        if (2 * *report.value != n) continue;
        std::string signature = refinement_signature(g) + "m=" + std::to_string(*report.value);
        if (auto it = seen.find(signature); it != seen.end()) {
          ++out[it->second].labeled_count;
          continue;
        }
        seen.emplace(signature, out.size());
        out.push_back({g, report.witness, std::move(signature), 1});
      }
    }
  }
  return out;
}

}  // namespace bootperc
